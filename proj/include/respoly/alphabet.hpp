#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace respoly {

// An ordered finite set of single-character letters.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string letters);

    std::size_t size() const { return letters_.size(); }
    char letter(std::size_t i) const { return letters_[i]; }
    const std::string& letters() const { return letters_; }
    bool contains(char c) const;
    std::size_t index_of(char c) const; // throws if absent

    bool operator==(const Alphabet& o) const { return letters_ == o.letters_; }
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

private:
    std::string letters_;
};

// A finite word over a fixed alphabet.
class Word {
public:
    Word(Alphabet alphabet, std::string symbols);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    char at(std::size_t i) const { return symbols_[i]; }

    Word prefix(std::size_t len) const;
    Word suffix_from(std::size_t pos) const; // symbols at positions >= pos
    Word append(char c) const;
    Word concat(const Word& other) const;

    bool operator==(const Word& o) const { return symbols_ == o.symbols_; }
    bool operator!=(const Word& o) const { return !(*this == o); }

private:
    Alphabet alphabet_;
    std::string symbols_;
};

// Length first, then letter indexes in alphabet order.
bool shortlex_less(const Alphabet& alphabet, std::string_view a, std::string_view b);

bool is_prefix_of(std::string_view shorter, std::string_view longer);

// All words over `alphabet` with length <= max_len, in shortlex order.
std::vector<std::string> words_up_to(const Alphabet& alphabet, std::size_t max_len);

} // namespace respoly
