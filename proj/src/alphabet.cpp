#include "respoly/alphabet.hpp"

#include "respoly/errors.hpp"

#include <algorithm>

namespace respoly {

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw error("alphabet must be non-empty");
    for (std::size_t i = 0; i < letters_.size(); ++i)
        for (std::size_t j = i + 1; j < letters_.size(); ++j)
            if (letters_[i] == letters_[j])
                throw error(std::string("duplicate letter in alphabet: ") + letters_[i]);
}

bool Alphabet::contains(char c) const {
    return letters_.find(c) != std::string::npos;
}

std::size_t Alphabet::index_of(char c) const {
    auto pos = letters_.find(c);
    if (pos == std::string::npos)
        throw alphabet_mismatch(std::string("letter '") + c + "' not in alphabet {" + letters_ + "}");
    return pos;
}

Word::Word(Alphabet alphabet, std::string symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
    for (char c : symbols_)
        if (!alphabet_.contains(c))
            throw alphabet_mismatch(std::string("word symbol '") + c + "' not in alphabet {" +
                                    alphabet_.letters() + "}");
}

Word Word::prefix(std::size_t len) const {
    return Word(alphabet_, symbols_.substr(0, len));
}

Word Word::suffix_from(std::size_t pos) const {
    return Word(alphabet_, pos >= symbols_.size() ? std::string() : symbols_.substr(pos));
}

Word Word::append(char c) const {
    return Word(alphabet_, symbols_ + c);
}

Word Word::concat(const Word& other) const {
    if (alphabet_ != other.alphabet_) throw alphabet_mismatch("concat over different alphabets");
    return Word(alphabet_, symbols_ + other.symbols_);
}

bool shortlex_less(const Alphabet& alphabet, std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return alphabet.index_of(a[i]) < alphabet.index_of(b[i]);
    return false;
}

bool is_prefix_of(std::string_view shorter, std::string_view longer) {
    return shorter.size() <= longer.size() &&
           longer.compare(0, shorter.size(), shorter) == 0;
}

std::vector<std::string> words_up_to(const Alphabet& alphabet, std::size_t max_len) {
    std::vector<std::string> out{""};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (std::size_t a = 0; a < alphabet.size(); ++a)
                out.push_back(out[i] + alphabet.letter(a));
        level_begin = level_end;
    }
    return out;
}

} // namespace respoly
