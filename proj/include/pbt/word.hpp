#pragma once

// Words over the alphabet {1,2}, ordered by the prefix relation.
// The empty word is the root of every nonempty tree and prints as "0".

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pbt {

class Word {
public:
    Word() = default;

    // Accepts a digit string of '1'/'2', or "0" for the empty word.
    static Word parse(std::string_view text) {
        if (text == "0") return Word{};
        Word w;
        w.letters_.reserve(text.size());
        for (char c : text) {
            if (c != '1' && c != '2')
                throw std::invalid_argument("Word::parse: bad letter in \"" + std::string(text) + "\"");
            w.letters_.push_back(c);
        }
        return w;
    }

    static Word root() { return Word{}; }

    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    // Letter at position i, as 1 or 2.
    int letter(std::size_t i) const { return letters_[i] - '0'; }
    char last() const { return letters_.back(); }

    Word child(int letter) const {
        Word w = *this;
        w.letters_.push_back(letter == 1 ? '1' : '2');
        return w;
    }
    Word left() const { return child(1); }
    Word right() const { return child(2); }

    Word parent() const {
        if (empty()) throw std::logic_error("Word::parent: root has no parent");
        Word w = *this;
        w.letters_.pop_back();
        return w;
    }

    // Concatenation w * v.
    Word append(const Word& suffix) const {
        Word w = *this;
        w.letters_ += suffix.letters_;
        return w;
    }

    // Prefix order: u <= w iff w = u v for some v.
    bool is_prefix_of(const Word& w) const {
        return w.letters_.size() >= letters_.size() &&
               w.letters_.compare(0, letters_.size(), letters_) == 0;
    }
    bool is_proper_prefix_of(const Word& w) const {
        return letters_.size() < w.letters_.size() && is_prefix_of(w);
    }

    // Suffix v such that *this = u v; requires u <= *this.
    Word suffix_after(const Word& prefix) const {
        if (!prefix.is_prefix_of(*this))
            throw std::invalid_argument("Word::suffix_after: not a prefix");
        Word w;
        w.letters_ = letters_.substr(prefix.length());
        return w;
    }

    std::string to_string() const { return empty() ? "0" : letters_; }

    // Shortlex: by length, ties broken lexicographically. Used everywhere a
    // total order on words is needed (serialization, enumeration order).
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
        return a.letters_ <=> b.letters_;
    }
    friend bool operator==(const Word& a, const Word& b) = default;

private:
    std::string letters_;  // each char '1' or '2'
};

}  // namespace pbt
