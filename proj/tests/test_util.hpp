#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "galepoly/graph.hpp"
#include "galepoly/poly.hpp"

namespace galepoly::testutil {

inline IntPoly poly(std::initializer_list<long> coeffs) {
    std::vector<Int> c;
    for (long v : coeffs) c.push_back(Int(v));
    return IntPoly(std::move(c));
}

inline IntPoly random_poly(std::mt19937_64& rng, int max_deg = 6, long max_coeff = 9) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
    std::vector<Int> c(deg(rng) + 1);
    for (auto& x : c) x = Int(coeff(rng));
    return IntPoly(std::move(c));
}

// instance with all multiplicities drawn from {1..rmax}
inline MultMatrix random_instance(std::mt19937_64& rng, int k, int rmax) {
    std::uniform_int_distribution<int> r(1, rmax);
    std::vector<int> up(upair_count(k));
    for (auto& x : up) x = r(rng);
    return MultMatrix(k, std::move(up));
}

// every instance with entries in {1..rmax}
inline std::vector<MultMatrix> all_instances(int k, int rmax) {
    std::vector<MultMatrix> out;
    int pairs = upair_count(k);
    std::vector<int> up(pairs, 1);
    for (;;) {
        out.push_back(MultMatrix(k, up));
        int i = 0;
        while (i < pairs && up[i] == rmax) up[i++] = 1;
        if (i == pairs) break;
        ++up[i];
    }
    return out;
}

// count vector for a unit-multiplicity instance given directed edges
inline std::vector<int> edges_to_counts(int k, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<int> c(opair_count(k), 0);
    for (auto [a, b] : edges) c[opair_index(k, a, b)] += 1;
    return c;
}

}  // namespace galepoly::testutil
