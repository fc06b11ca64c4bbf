#include "indel/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace indel {

Word::Word(std::vector<int> symbols, int alphabet_size)
    : symbols_(std::move(symbols)), q_(alphabet_size) {
    if (q_ < 1) throw std::invalid_argument("Word: alphabet size must be >= 1");
    for (int s : symbols_) {
        if (s < 0 || s >= q_) {
            throw std::invalid_argument("Word: symbol " + std::to_string(s) +
                                        " outside [0, " + std::to_string(q_) + ")");
        }
    }
}

Code::Code(int alphabet_size, int length) : q_(alphabet_size), n_(length) {
    if (q_ < 1) throw std::invalid_argument("Code: alphabet size must be >= 1");
    if (n_ < 0) throw std::invalid_argument("Code: negative length");
}

Code::Code(int alphabet_size, int length, std::vector<Word> words)
    : Code(alphabet_size, length) {
    for (const Word& w : words) {
        if (w.alphabet_size() != q_)
            throw std::invalid_argument("Code: word alphabet mismatch");
        if (w.size() != n_)
            throw std::invalid_argument("Code: word length mismatch");
    }
    std::sort(words.begin(), words.end());
    if (std::adjacent_find(words.begin(), words.end()) != words.end())
        throw std::invalid_argument("Code: duplicate word");
    words_ = std::move(words);
}

bool Code::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

std::string to_line(const Word& w) {
    std::string out;
    for (int i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

Word parse_word_line(const std::string& line, int alphabet_size) {
    std::istringstream is(line);
    std::vector<int> symbols;
    int v;
    while (is >> v) symbols.push_back(v);
    if (!is.eof() && is.fail()) {
        is.clear();
        std::string junk;
        is >> junk;
        throw std::invalid_argument("word line: unexpected token '" + junk + "'");
    }
    return Word(std::move(symbols), alphabet_size);
}

void write_code(std::ostream& os, const Code& c) {
    os << "q=" << c.alphabet_size() << " n=" << c.length() << '\n';
    for (const Word& w : c.words()) os << to_line(w) << '\n';
}

Code read_code(std::istream& is) {
    std::string header;
    if (!std::getline(is, header))
        throw std::invalid_argument("code file: missing header");
    int q = 0, n = -1;
    if (std::sscanf(header.c_str(), "q=%d n=%d", &q, &n) != 2)
        throw std::invalid_argument("code file: bad header '" + header + "'");
    std::vector<Word> words;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        words.push_back(parse_word_line(line, q));
    }
    return Code(q, n, std::move(words));
}

std::string code_to_text(const Code& c) {
    std::ostringstream os;
    write_code(os, c);
    return os.str();
}

Code code_from_text(const std::string& text) {
    std::istringstream is(text);
    return read_code(is);
}

} // namespace indel
