#pragma once

#include <vector>

#include "hsz/artin.hpp"
#include "hsz/symprep.hpp"
#include "oracle.hpp"

namespace test_support {

inline hsz::BraidWord to_word(const oracle::Word& w, int genus) {
    std::vector<hsz::Letter> letters;
    for (auto [i, s] : w) letters.push_back({i, s});
    return hsz::BraidWord(2 * genus + 2, std::move(letters));
}

inline oracle::Word to_oracle(const hsz::BraidWord& w) {
    oracle::Word out;
    for (const auto& l : w.letters()) out.emplace_back(l.index, l.sign);
    return out;
}

inline oracle::Mat to_oracle(const hsz::SympMatrix& m) {
    oracle::Mat out(static_cast<std::size_t>(m.dim()), oracle::Vec(static_cast<std::size_t>(m.dim())));
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m(r, c).get_si();
    return out;
}

inline oracle::Vec to_oracle(const hsz::LatticeVector& v) {
    oracle::Vec out;
    for (const auto& x : v.coords()) out.push_back(x.get_si());
    return out;
}

inline hsz::LatticeVector lattice(const oracle::Vec& v) {
    std::vector<hsz::Integer> c;
    for (long long x : v) c.emplace_back(static_cast<long>(x));
    return hsz::LatticeVector(std::move(c));
}

}  // namespace test_support
