#pragma once

#include <string>
#include <vector>

#include "errors.hpp"

namespace ppmat {

/// A word w_1 ... w_n over the alphabet [m] = {1, ..., m}.
class Word {
public:
    Word() = default;

    Word(std::vector<int> letters, int alphabet_size)
        : letters_(std::move(letters)), m_(alphabet_size) {
        detail::require(m_ >= 1, "alphabet size must be positive");
        for (int a : letters_)
            detail::require(a >= 1 && a <= m_, "word letter outside alphabet [1, m]");
    }

    /// "132434" -> letters 1,3,2,4,3,4 (one digit per letter, so m <= 9),
    /// or "1,3,2,..." for larger alphabets.
    static Word parse(const std::string& text, int alphabet_size) {
        std::vector<int> letters;
        if (text.find(',') != std::string::npos) {
            std::size_t start = 0;
            while (start <= text.size()) {
                const auto end = text.find(',', start);
                const auto tok = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
                detail::require(!tok.empty(), "empty letter in word");
                std::size_t used = 0;
                int v = 0;
                try {
                    v = std::stoi(tok, &used);
                } catch (const std::exception&) {
                    throw InvalidArgument("word letters must be integers");
                }
                detail::require(used == tok.size(), "word letters must be integers");
                letters.push_back(v);
                if (end == std::string::npos) break;
                start = end + 1;
            }
        } else {
            for (char c : text) {
                detail::require(c >= '0' && c <= '9', "word letters must be digits");
                letters.push_back(c - '0');
            }
        }
        return Word(std::move(letters), alphabet_size);
    }

    const std::vector<int>& letters() const noexcept { return letters_; }
    int length() const noexcept { return static_cast<int>(letters_.size()); }
    int alphabet_size() const noexcept { return m_; }

    /// 1-based letter access.
    int operator[](int i) const { return letters_.at(static_cast<std::size_t>(i - 1)); }

    std::string to_string() const {
        std::string s;
        const bool digits = m_ <= 9;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (!digits && i) s += ',';
            s += std::to_string(letters_[i]);
        }
        return s;
    }

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
    int m_ = 1;
};

}  // namespace ppmat
