#include "jacext/finite_field.hpp"

#include <algorithm>
#include <numeric>

namespace jacext {

namespace {

constexpr long kMaxBaseOrder = 49;
constexpr long kMaxExtensionOrder = 2401;

std::vector<int> label_digits(int label, int p, unsigned e) {
    std::vector<int> out(e);
    for (unsigned i = 0; i < e; ++i) {
        out[i] = label % p;
        label /= p;
    }
    return out;
}

int digits_label(const std::vector<int>& digits, int p) {
    int label = 0;
    for (size_t i = digits.size(); i-- > 0;) label = label * p + digits[i];
    return label;
}

// (a * b) mod modulus over F_p, dense degree-(e-1) digit vectors.
std::vector<int> polymul_mod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& modulus, int p) {
    const size_t e = a.size();
    std::vector<int> tmp(2 * e - 1, 0);
    for (size_t i = 0; i < e; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < e; ++j) tmp[i + j] = (tmp[i + j] + a[i] * b[j]) % p;
    }
    for (size_t i = tmp.size(); i-- > e;) {
        const int c = tmp[i];
        if (c == 0) continue;
        tmp[i] = 0;
        for (size_t j = 0; j < e; ++j) {
            tmp[i - e + j] = ((tmp[i - e + j] - c * modulus[j]) % p + p) % p;
        }
    }
    tmp.resize(e);
    return tmp;
}

}  // namespace

FieldSpec canonical_field_spec(const Integer& q) {
    PrimePower pp = factor_prime_power(q);  // NotPrimePowerError propagates
    if (pp.q > kMaxBaseOrder) {
        throw FieldError("base fields are capped at order 49, got q = " + q.get_str());
    }
    FieldSpec spec;
    spec.p = pp.p;
    spec.e = pp.e;
    if (pp.e == 1) {
        spec.modulus = {0, 1};
        return spec;
    }
    const long ql = pp.q.get_si();
    switch (ql) {
        case 4: spec.modulus = {1, 1, 1}; break;
        case 8: spec.modulus = {1, 1, 0, 1}; break;
        case 9: spec.modulus = {1, 0, 1}; break;
        case 16: spec.modulus = {1, 1, 0, 0, 1}; break;
        case 25: spec.modulus = {1, 1, 1}; break;
        case 27: spec.modulus = {1, 2, 0, 1}; break;
        case 49: spec.modulus = {3, 1, 1}; break;
        default: throw FieldError("no pinned modulus for q = " + q.get_str());
    }
    return spec;
}

Field::Field(const FieldSpec& spec) : spec_(spec) {
    if (spec.p < 2 || spec.e < 1) throw FieldError("field spec needs prime p and e >= 1");
    p_ = static_cast<int>(spec.p.get_si());
    e_ = spec.e;
    for (int d = 2; d * d <= p_; ++d) {
        if (p_ % d == 0) throw FieldError("field characteristic must be prime");
    }
    long order = 1;
    for (unsigned i = 0; i < e_; ++i) order *= p_;
    if (order > kMaxBaseOrder) {
        throw FieldError("base fields are capped at order 49, got " + std::to_string(order));
    }
    q_ = static_cast<int>(order);
    if (spec.modulus.size() != e_ + 1 || spec.modulus.back() != 1) {
        throw FieldError("modulus must be monic of degree e");
    }
    for (int c : spec.modulus) {
        if (c < 0 || c >= p_) throw FieldError("modulus coefficients must lie in [0, p)");
    }

    add_.resize(static_cast<size_t>(q_) * q_);
    mul_.resize(static_cast<size_t>(q_) * q_);
    neg_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        auto da = label_digits(a, p_, e_);
        std::vector<int> na(e_);
        for (unsigned i = 0; i < e_; ++i) na[i] = (p_ - da[i]) % p_;
        neg_[a] = digits_label(na, p_);
        for (int b = 0; b < q_; ++b) {
            auto db = label_digits(b, p_, e_);
            std::vector<int> sum(e_);
            for (unsigned i = 0; i < e_; ++i) sum[i] = (da[i] + db[i]) % p_;
            add_[static_cast<size_t>(a) * q_ + b] = digits_label(sum, p_);
            mul_[static_cast<size_t>(a) * q_ + b] =
                digits_label(polymul_mod(da, db, spec.modulus, p_), p_);
        }
    }

    // The inverse scan is also the irreducibility proof: a reducible modulus
    // leaves zero divisors without inverses.
    inv_.assign(q_, -1);
    for (int a = 1; a < q_; ++a) {
        for (int b = 1; b < q_; ++b) {
            if (mul(a, b) == 1) {
                inv_[a] = b;
                break;
            }
        }
        if (inv_[a] < 0) {
            throw FieldError("modulus is reducible: label " + std::to_string(a) +
                             " has no inverse");
        }
    }

    sqrt_sets_.assign(q_, {});
    for (int y = 0; y < q_; ++y) sqrt_sets_[mul(y, y)].push_back(y);
    if (p_ == 2) {
        as_solvable_.assign(q_, 0);
        for (int z = 0; z < q_; ++z) as_solvable_[add(mul(z, z), z)] = 1;
    } else {
        int four = 0;
        for (int i = 0; i < 4; ++i) four = add(four, 1);
        quarter_ = inv(four);
    }
}

int Field::check(int a) const {
    if (a < 0 || a >= q_) throw FieldError("element label out of range: " + std::to_string(a));
    return a;
}

int Field::inv(int a) const {
    check(a);
    if (a == 0) throw DivisionByZeroError("inv(0) in F_" + std::to_string(q_));
    return inv_[a];
}

int Field::pow(int a, unsigned long k) const {
    check(a);
    int result = 1, base = a;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

std::vector<int> Field::enumerate_all() const {
    std::vector<int> out(q_);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

bool Field::artin_schreier_solvable(int a) const {
    check(a);
    if (p_ != 2) throw FieldError("Artin-Schreier table exists only in characteristic 2");
    return as_solvable_[a] != 0;
}

int Field::count_quadratic_solutions(int H, int C) const {
    check(H);
    check(C);
    if (p_ == 2) {
        if (H == 0) return 1;  // squaring is a bijection
        const int hi = inv(H);
        return as_solvable_[mul(C, mul(hi, hi))] ? 2 : 0;
    }
    // y^2 + H*y = C  <=>  (y + H/2)^2 = C + H^2/4
    return static_cast<int>(sqrt_sets_[add(C, mul(mul(H, H), quarter_))].size());
}

std::vector<int> Field::coeffs(int label) const {
    check(label);
    return label_digits(label, p_, e_);
}

QuadExt::QuadExt(Field base) : base_(std::move(base)) {
    q_ = static_cast<int>(base_.order());
    n_ = static_cast<long>(q_) * q_;
    if (n_ > kMaxExtensionOrder) {
        throw FieldError("quadratic extensions are capped at order 2401");
    }
    bool found = false;
    for (int c0 = 0; c0 < q_ && !found; ++c0) {
        for (int c1 = 0; c1 < q_ && !found; ++c1) {
            bool irreducible = true;
            for (int x = 0; x < q_; ++x) {
                if (base_.add(base_.add(base_.mul(x, x), base_.mul(c1, x)), c0) == 0) {
                    irreducible = false;
                    break;
                }
            }
            if (irreducible) {
                c0_ = c0;
                c1_ = c1;
                found = true;
            }
        }
    }
    if (!found) throw FieldError("no irreducible quadratic over the base field");

    if (n_ <= 1024) {
        mul_.resize(static_cast<size_t>(n_) * n_);
        for (int a = 0; a < n_; ++a) {
            for (int b = 0; b <= a; ++b) {
                int v = mul_direct(a, b);
                mul_[static_cast<size_t>(a) * n_ + b] = v;
                mul_[static_cast<size_t>(b) * n_ + a] = v;
            }
        }
    }

    inv_.assign(n_, -1);
    for (int a = 1; a < n_; ++a) {
        inv_[a] = pow(a, static_cast<unsigned long>(n_ - 2));
        if (mul(a, inv_[a]) != 1) throw FieldError("extension inverse construction failed");
    }

    sqrt_sets_.assign(n_, {});
    for (int y = 0; y < n_; ++y) sqrt_sets_[mul(y, y)].push_back(y);
    if (base_.p() == 2) {
        as_solvable_.assign(n_, 0);
        for (int z = 0; z < n_; ++z) as_solvable_[add(mul(z, z), z)] = 1;
    } else {
        int four = 0;
        for (int i = 0; i < 4; ++i) four = add(four, 1);
        quarter_ = inv(four);
    }
}

int QuadExt::check(int a) const {
    if (a < 0 || a >= n_) throw FieldError("extension label out of range: " + std::to_string(a));
    return a;
}

int QuadExt::embed(int a) const {
    if (a < 0 || a >= q_) throw FieldError("embed: base label out of range");
    return a;
}

int QuadExt::add(int a, int b) const {
    check(a);
    check(b);
    return base_.add(a % q_, b % q_) + base_.add(a / q_, b / q_) * q_;
}

int QuadExt::neg(int a) const {
    check(a);
    return base_.neg(a % q_) + base_.neg(a / q_) * q_;
}

int QuadExt::mul_direct(int a, int b) const {
    const int al = a % q_, ah = a / q_, bl = b % q_, bh = b / q_;
    // (al + ah*t)(bl + bh*t), t^2 = -c0 - c1*t
    const int hh = base_.mul(ah, bh);
    int lo = base_.add(base_.mul(al, bl), base_.mul(hh, base_.neg(c0_)));
    int hi = base_.add(base_.add(base_.mul(al, bh), base_.mul(ah, bl)),
                       base_.mul(hh, base_.neg(c1_)));
    return lo + hi * q_;
}

int QuadExt::mul(int a, int b) const {
    check(a);
    check(b);
    if (!mul_.empty()) return mul_[static_cast<size_t>(a) * n_ + b];
    return mul_direct(a, b);
}

int QuadExt::inv(int a) const {
    check(a);
    if (a == 0) throw DivisionByZeroError("inv(0) in the quadratic extension");
    return inv_[a];
}

int QuadExt::pow(int a, unsigned long k) const {
    check(a);
    int result = 1, base = a;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

std::vector<int> QuadExt::enumerate_all() const {
    std::vector<int> out(n_);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

bool QuadExt::artin_schreier_solvable(int a) const {
    check(a);
    if (base_.p() != 2) throw FieldError("Artin-Schreier table exists only in characteristic 2");
    return as_solvable_[a] != 0;
}

int QuadExt::count_quadratic_solutions(int H, int C) const {
    check(H);
    check(C);
    if (base_.p() == 2) {
        if (H == 0) return 1;
        const int hi = inv(H);
        return as_solvable_[mul(C, mul(hi, hi))] ? 2 : 0;
    }
    return static_cast<int>(sqrt_sets_[add(C, mul(mul(H, H), quarter_))].size());
}

QuadExt build_quadratic_extension(const Field& base) { return QuadExt(base); }

}  // namespace jacext
