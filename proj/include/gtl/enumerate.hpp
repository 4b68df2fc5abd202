#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <random>
#include <thread>
#include <type_traits>
#include <vector>

#include "gtl/tensor.hpp"

namespace gtl {

// All words of the given length, lexicographic in the letter order.
inline std::vector<Word> all_words(int genus, int length) {
    const std::vector<Letter> letters = basis_letters(genus);
    std::vector<Word> out;
    std::vector<std::size_t> digits(static_cast<std::size_t>(length), 0);
    while (true) {
        std::vector<Letter> w;
        w.reserve(digits.size());
        for (std::size_t d : digits) w.push_back(letters[d]);
        out.emplace_back(std::move(w));
        int pos = length - 1;
        while (pos >= 0 && ++digits[pos] == letters.size()) digits[pos--] = 0;
        if (pos < 0) break;
    }
    return out;
}

inline std::vector<Word> all_words_up_to(int genus, int min_length, int max_length) {
    std::vector<Word> out;
    for (int m = min_length; m <= max_length; ++m) {
        auto ws = all_words(genus, m);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

inline bool is_necklace(const Word& w) {
    for (std::size_t p = 1; p < w.size(); ++p)
        if (w.rotated(p) < w) return false;
    return true;
}

// One representative (the least rotation) per cyclic class.
inline std::vector<Word> necklaces(int genus, int length) {
    std::vector<Word> out;
    for (auto& w : all_words(genus, length))
        if (is_necklace(w)) out.push_back(std::move(w));
    return out;
}

inline std::vector<Word> necklaces_up_to(int genus, int min_length, int max_length) {
    std::vector<Word> out;
    for (int m = min_length; m <= max_length; ++m) {
        auto ws = necklaces(genus, m);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

inline Letter random_letter(std::mt19937_64& rng, int genus) {
    return Letter::from_code(static_cast<int>(rng() % static_cast<std::uint64_t>(2 * genus)));
}

inline Word random_word(std::mt19937_64& rng, int genus, int length) {
    std::vector<Letter> w;
    for (int i = 0; i < length; ++i) w.push_back(random_letter(rng, genus));
    return Word(std::move(w));
}

// Evaluates f on every input with up to `jobs` threads; results keep input order.
template <class In, class F>
auto parallel_map(const std::vector<In>& inputs, int jobs, F&& f) {
    using Out = std::invoke_result_t<F&, const In&>;
    std::vector<Out> out(inputs.size());
    const std::size_t n = inputs.size();
    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(n, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(inputs[i]);
        return out;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < workers; ++t)
        threads.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < n; i += workers) out[i] = f(inputs[i]);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : threads) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace gtl
