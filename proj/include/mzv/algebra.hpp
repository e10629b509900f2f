#pragma once

#include <functional>

#include "mzv/linear_combination.hpp"

namespace mzv {

/// Sum of the 2^{s-1} indices obtained by putting ',' or '+' between
/// consecutive parts of l, each with coefficient 1.
FormalSum star_expand(const Index& l);

/// Quasi-shuffle products, bilinear. The recursion appends at the right end,
/// which is the outermost summation variable:
///   (u,a) * (v,b) = (u * (v,b), a) + ((u,a) * v, b) + merge * (u * v, a+b)
/// with merge = +1 for the stuffle and -1 for the bar-stuffle.
FormalSum stuffle(const FormalSum& a, const FormalSum& b);
FormalSum bar_stuffle(const FormalSum& a, const FormalSum& b);

/// ((k_1..k_{r-1}) * (l_1..l_{s-1}), k_r + l_s), extended bilinearly.
/// Throws EmptyIndex if either side contains the empty index.
FormalSum circled_ast(const FormalSum& k, const FormalSum& l);

WordSum shuffle(const WordSum& a, const WordSum& b);

FormalSum map_linear(const std::function<FormalSum(const Index&)>& f, const FormalSum& s);

/// Monomial versions used in the hot loops.
FormalSum stuffle_monomials(const Index& a, const Index& b, int merge_sign = 1);
WordSum shuffle_monomials(const Word& a, const Word& b);

/// a^{*n} with a * a computed by the stuffle; a^{*0} = [()].
FormalSum stuffle_power(const FormalSum& a, int n);
WordSum shuffle_power(const WordSum& a, int n);

}  // namespace mzv
