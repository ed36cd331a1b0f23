#pragma once

#include "pbt/correspondence.hpp"
#include "pbt/graded_graph.hpp"
#include "pbt/growth_rsk.hpp"
#include "pbt/labelling.hpp"
#include "pbt/operators.hpp"
#include "pbt/polynomial.hpp"
#include "pbt/qsym.hpp"
#include "pbt/tree.hpp"
#include "pbt/word.hpp"
