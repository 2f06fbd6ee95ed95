#pragma once

#include <utility>
#include <vector>

#include "jacext/errors.hpp"
#include "jacext/exact_arith.hpp"

namespace jacext {

// Monic irreducible modulus of degree e over F_p, all e+1 coefficients listed
// ascending (so the last entry is 1). Prime fields use the degree-1 modulus t.
struct FieldSpec {
    Integer p;
    unsigned e = 1;
    std::vector<int> modulus;
};

// The pinned specs: F4 t^2+t+1, F8 t^3+t+1, F9 t^2+1, F16 t^4+t+1,
// F25 t^2+t+1, F27 t^3+2t+1, F49 t^2+t+3, and t for the primes.
// Rejects q > 49 and non-prime-powers.
FieldSpec canonical_field_spec(const Integer& q);

// F_{p^e} with dense coefficient-vector elements addressed by their digit
// label sum(c_i * p^i) < q. All arithmetic is table-driven; construction costs
// O(q^2) and doubles as an irreducibility proof (a nonzero element without an
// inverse means the modulus splits).
class Field {
  public:
    explicit Field(const FieldSpec& spec);

    long order() const { return q_; }
    int p() const { return p_; }
    unsigned e() const { return e_; }
    const FieldSpec& spec() const { return spec_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add_[idx(a, neg_[check(b)])]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[check(a)]; }
    int inv(int a) const;
    int pow(int a, unsigned long k) const;

    // 0, 1, 2, ... in digit-label order.
    std::vector<int> enumerate_all() const;

    // All y with y^2 = a: 0..2 elements for odd p, exactly 1 for p = 2.
    std::vector<int> sqrt_set(int a) const { return sqrt_sets_[check(a)]; }

    // Whether z^2 + z = a has a solution (characteristic 2 only).
    bool artin_schreier_solvable(int a) const;

    // #{y : y^2 + H*y = C}; the one point-counting primitive shared by every
    // chart of every curve model (completes the square for odd p, divides by
    // H and consults the Artin-Schreier table for p = 2).
    int count_quadratic_solutions(int H, int C) const;

    // Ascending base-p digits of a label (the element's coefficient vector).
    std::vector<int> coeffs(int label) const;

  private:
    int idx(int a, int b) const { return check(a) * q_ + check(b); }
    int check(int a) const;

    FieldSpec spec_;
    int p_ = 0;
    unsigned e_ = 1;
    int q_ = 0;
    std::vector<int> add_, mul_, neg_, inv_;
    std::vector<std::vector<int>> sqrt_sets_;
    std::vector<char> as_solvable_;  // p = 2
    int quarter_ = 0;                // inv(4), odd p
};

// F_{q^2} over a base field, with modulus2 = t^2 + c1*t + c0 chosen as the
// lexicographically smallest irreducible by the digit encoding of (c0, c1).
// Elements are labels lo + hi*q, so embed() is the identity on labels.
class QuadExt {
  public:
    explicit QuadExt(Field base);

    long order() const { return n_; }
    const Field& base() const { return base_; }
    std::pair<int, int> modulus2() const { return {c0_, c1_}; }

    int embed(int a) const;
    int frobenius(int x) const { return pow(x, static_cast<unsigned long>(base_.order())); }

    int add(int a, int b) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const;
    int neg(int a) const;
    int inv(int a) const;
    int pow(int a, unsigned long k) const;

    std::vector<int> enumerate_all() const;
    std::vector<int> sqrt_set(int a) const { return sqrt_sets_[check(a)]; }
    bool artin_schreier_solvable(int a) const;
    int count_quadratic_solutions(int H, int C) const;

  private:
    int check(int a) const;
    int mul_direct(int a, int b) const;

    Field base_;
    long n_ = 0;
    int q_ = 0;
    int c0_ = 0, c1_ = 0;  // modulus2 non-leading coefficients
    std::vector<int> mul_;  // full table when n is small, else empty
    std::vector<std::vector<int>> sqrt_sets_;
    std::vector<char> as_solvable_;
    std::vector<int> inv_;
    int quarter_ = 0;
};

QuadExt build_quadratic_extension(const Field& base);

}  // namespace jacext
