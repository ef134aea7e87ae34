#pragma once

// The hyperoctahedral group (Weyl group of type C_n) as signed permutations
// of the parameters a1..an, with Coxeter length, the alternator and
// symmetrizer, and the Weyl denominator with its product form.  Also the
// order-8 group acting on the four GSp(4) parameters through the relation
// a1*a3 = a2*a4, with signs inherited from the rank-2 hyperoctahedral group.

#include <array>
#include <vector>

#include "wbm/laurent.hpp"

namespace wbm {

// w sends a_{i+1} to a_{perm[i]+1}^{sign[i]} (slots are 0-based).
struct SignedPerm {
    std::vector<int> perm;
    std::vector<int> sign; // entries +1 or -1
    int length = 0;        // count of positive roots sent negative

    int rank() const { return static_cast<int>(perm.size()); }
    int sgn() const { return (length % 2) ? -1 : 1; }
    bool operator==(const SignedPerm& o) const { return perm == o.perm && sign == o.sign; }
};

SignedPerm identity_perm(int n);
SignedPerm compose(const SignedPerm& w, const SignedPerm& u); // w after u
SignedPerm inverse(const SignedPerm& w);
int coxeter_length(const std::vector<int>& perm, const std::vector<int>& sign);

// All 2^n * n! elements, each once, lengths attached.  Cached per rank.
const std::vector<SignedPerm>& hyperoctahedral(int n); // UsageError for n < 1

// Variable permutation/inversion applied to the a1..an exponents; all other
// variables pass through.
LaurentPoly act(const SignedPerm& w, const LaurentPoly& p);
RationalFn act(const SignedPerm& w, const RationalFn& f);

// Signed sum over the whole group.
LaurentPoly alternator(int n, const LaurentPoly& p);
// Unsigned sum over the whole group.
LaurentPoly symmetrize(int n, const LaurentPoly& p);

// The alternant (-1)^n A(a1^n a2^(n-1) ... an).  Both this form and the
// closed product form are computed and checked against each other; a
// mismatch is an internal bug and aborts via logic_error.
LaurentPoly weyl_denominator(int n, const VarTablePtr& table);
LaurentPoly weyl_denominator_product(int n, const VarTablePtr& table);

// True iff p is fixed by every generator (adjacent transpositions and the
// sign flip on a_n).
bool is_weyl_invariant(int n, const LaurentPoly& p);

// ---------------------------------------------------------------------------
// The group of the four GSp(4) parameters.  Internally a4 is eliminated via
// a4 = a1*a3/a2, so elements act on Laurent polynomials in a1, a2, a3 by
// monomial substitution; b1 and v are fixed.

struct Omega4Elem {
    std::array<int, 4> perm; // 0-based images of the four parameter slots
    int length = 0;
    int sgn() const { return (length % 2) ? -1 : 1; }
};

const std::vector<Omega4Elem>& omega4(); // the 8 elements, cached

LaurentPoly act_omega4(const Omega4Elem& w, const LaurentPoly& p);
LaurentPoly alternator_omega4(const LaurentPoly& p);
bool is_omega4_invariant(const LaurentPoly& p);

// Exponent vector of a_j (1-based) over the eliminated variables a1,a2,a3.
std::array<int, 3> gsp4_param_exponents(int j);

} // namespace wbm
