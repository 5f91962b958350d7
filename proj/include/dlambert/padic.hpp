#pragma once

/**
 * @file padic.hpp
 * @brief Truncated p-adic arithmetic modulo p^e.
 *
 * A unit g of Z_p splits as g = omega(g) * <g>, where omega(g) is the
 * Teichmueller representative (a (p-1)-th root of unity congruent to g
 * mod p) and <g> lies in 1 + pZ_p. On the one-unit part, powers interpolate
 * to a continuous function of the exponent: <g>^x = exp(x log <g>).
 *
 * All results are residues mod p^e. The log/exp series are summed to 2e
 * terms; beyond that every term vanishes mod p^e for odd p.
 */

#include "dlambert/modarith.hpp"

namespace dlambert {

struct TeichDecomposition {
  Residue g;
  Residue omega;
  Residue one_unit;
};

/// Truncation rule for the log/exp series.
struct PadicSeriesBudget {
  unsigned term_count;        ///< series terms summed (2e)
  unsigned working_exponent;  ///< e + floor(log_p(term_count))
};

PadicSeriesBudget series_budget(const PrimePower& pp);

/// omega(g) = g^(p^(e-1)) mod p^e.
Residue teichmuller(const PrimePower& pp, const Residue& g);

/// <g> = g * omega(g)^-1 mod p^e.
Residue one_unit_part(const PrimePower& pp, const Residue& g);

TeichDecomposition decompose(const PrimePower& pp, const Residue& g);

/// log(u) for u = 1 mod p. The result is divisible by p.
Residue padic_log(const PrimePower& pp, const Residue& u);

/// exp(t) for t = 0 mod p. The result is 1 mod p.
Residue padic_exp(const PrimePower& pp, const Residue& t);

/// u^x for a one-unit u and any integer x (negative allowed), using
/// ord(u) | p^(e-1).
Residue one_unit_power(const PrimePower& pp, const Residue& u, i64 x);

}  // namespace dlambert
