#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "galepoly/poly.hpp"

namespace galepoly {

using Rat = mpq_class;
using ZMat = std::vector<std::vector<Int>>;
using QMat = std::vector<std::vector<Rat>>;

// Exact dense linear algebra at desk scale. Everything here is over the
// rationals or the integers; no rounding anywhere.

int rank_q(QMat m);

// Some solution of A x = b (free variables set to zero), or nullopt when the
// system is inconsistent.
std::optional<std::vector<Rat>> solve_q(QMat a, std::vector<Rat> b);

// Determinant of a square integer matrix.
Int det_z(ZMat m);

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
int rank_z_bareiss(ZMat m);

// Rank of the same matrix with entries reduced modulo a prime; used as a
// fast-path consistency check against the exact rank.
int rank_mod_p(const ZMat& m, std::uint64_t p);

// Basis of the integer kernel lattice {x : A x = 0}, one basis vector per
// row, obtained by unimodular column reduction.
ZMat kernel_z(const ZMat& a);

}  // namespace galepoly
