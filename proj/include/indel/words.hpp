#pragma once

#include <compare>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace indel {

/// Sentinel for "no finite distance" (codes with fewer than two members).
inline constexpr int k_infinite_distance = std::numeric_limits<int>::max();

/// A finite word over the alphabet {0, ..., q-1}. Immutable after construction.
class Word {
public:
    Word() = default;
    Word(std::vector<int> symbols, int alphabet_size);

    int alphabet_size() const { return q_; }
    int size() const { return static_cast<int>(symbols_.size()); }
    bool empty() const { return symbols_.empty(); }
    int operator[](int i) const { return symbols_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& symbols() const { return symbols_; }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<int> symbols_;
    int q_ = 1;
};

/// A set of distinct words of uniform length and alphabet. Words are kept
/// sorted; the constructor rejects duplicates and mixed parameters.
class Code {
public:
    Code(int alphabet_size, int length);
    Code(int alphabet_size, int length, std::vector<Word> words);

    int alphabet_size() const { return q_; }
    int length() const { return n_; }
    int size() const { return static_cast<int>(words_.size()); }
    const std::vector<Word>& words() const { return words_; }
    bool contains(const Word& w) const;

    friend bool operator==(const Code&, const Code&) = default;

private:
    int q_ = 1;
    int n_ = 0;
    std::vector<Word> words_;
};

// Text formats. A word is space-separated decimal symbols on one line; a code
// file starts with a header line `q=<int> n=<int>`.
std::string to_line(const Word& w);
Word parse_word_line(const std::string& line, int alphabet_size);

void write_code(std::ostream& os, const Code& c);
Code read_code(std::istream& is);
std::string code_to_text(const Code& c);
Code code_from_text(const std::string& text);

} // namespace indel
