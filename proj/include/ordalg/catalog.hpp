#pragma once

#include <memory>

#include "ordalg/algebra.hpp"
#include "ordalg/monad.hpp"

// Standard theories over small signatures, and the monad objects TX viewed as
// algebras for them.
namespace ordalg::catalog {

/// `plus` of arity x < y and unary `at`.
std::shared_ptr<const Signature> linear_signature();
/// linear_signature with `unit : {x} |- x <= at(x)`.
Theory linear_theory();

/// Nullary `zero` and `plus` of arity the discrete pair {x, y}.
std::shared_ptr<const Signature> semilattice_signature();
/// Monotone, associative, commutative, idempotent `plus` with unit `zero`; coherent.
Theory internal_semilattice_theory();
/// {x} |- zero <= x, {x, y} |- x <= plus(x,y) and y <= plus(x,y), and
/// {x <= z, y <= z} |- plus(x,y) <= z.
Theory join_semilattice_theory();

/// Unary `bot` and `j` of arity {x, y, z} with x <= z and y <= z.
std::shared_ptr<const Signature> bounded_join_signature();
/// `bot(x) <= y`, `x <= j(x,y,z)`, `y <= j(x,y,z)`, `j(x,y,z) <= w` for every
/// common bound w.
Theory bounded_join_theory();

/// TX under the semilattice signature: zero = the empty set, plus = f*({x, y})
/// for the valuation f. For conv this is the hull of the union, for down the union.
FiniteAlgebra semilattice_on_TX(const KleisliTriple& t, const FinPoset& x);

/// TX under the bounded-join signature: bot = the empty set, j(S, S', S'') = f*({x, y}).
FiniteAlgebra bounded_join_on_TX(const KleisliTriple& t, const FinPoset& x);

}  // namespace ordalg::catalog
