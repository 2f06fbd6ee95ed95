#include "jacext/curve_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <ios>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace jacext {

namespace {

// Dense polynomial over a small field, coefficients ascending; big enough for
// f' ^2 + f * h'^2 (degree <= 10).
struct SmallPoly {
    std::array<int, 12> c{};
    int deg = -1;

    void refresh_deg() {
        deg = -1;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
            if (c[static_cast<size_t>(i)] != 0) {
                deg = i;
                break;
            }
        }
    }
};

int scalar_label(const Field& fld, long k) {
    long p = fld.p();
    return static_cast<int>(((k % p) + p) % p);
}

SmallPoly poly_from(const int* coeffs, int n) {
    SmallPoly out;
    for (int i = 0; i < n; ++i) out.c[static_cast<size_t>(i)] = coeffs[i];
    out.refresh_deg();
    return out;
}

SmallPoly derivative(const Field& fld, const SmallPoly& a) {
    SmallPoly out;
    for (int i = 0; i < a.deg; ++i) {
        out.c[static_cast<size_t>(i)] =
            fld.mul(scalar_label(fld, i + 1), a.c[static_cast<size_t>(i) + 1]);
    }
    out.refresh_deg();
    return out;
}

SmallPoly poly_mul(const Field& fld, const SmallPoly& a, const SmallPoly& b) {
    SmallPoly out;
    if (a.deg < 0 || b.deg < 0) return out;
    for (int i = 0; i <= a.deg; ++i) {
        if (a.c[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j <= b.deg; ++j) {
            size_t k = static_cast<size_t>(i + j);
            out.c[k] = fld.add(out.c[k], fld.mul(a.c[static_cast<size_t>(i)],
                                                 b.c[static_cast<size_t>(j)]));
        }
    }
    out.refresh_deg();
    return out;
}

SmallPoly poly_add(const Field& fld, const SmallPoly& a, const SmallPoly& b) {
    SmallPoly out;
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = fld.add(a.c[i], b.c[i]);
    out.refresh_deg();
    return out;
}

// gcd(a, b) has degree <= 0 (i.e. a and b share no root in the closure).
bool gcd_is_constant(const Field& fld, SmallPoly a, SmallPoly b) {
    while (b.deg >= 0) {
        while (a.deg >= b.deg && a.deg >= 0) {
            int q0 = fld.mul(a.c[static_cast<size_t>(a.deg)],
                             fld.inv(b.c[static_cast<size_t>(b.deg)]));
            int shift = a.deg - b.deg;
            for (int j = 0; j <= b.deg; ++j) {
                size_t k = static_cast<size_t>(j + shift);
                a.c[k] = fld.sub(a.c[k], fld.mul(q0, b.c[static_cast<size_t>(j)]));
            }
            a.refresh_deg();
        }
        std::swap(a, b);
    }
    return a.deg <= 0;
}

template <class Fld>
int eval_poly(const Fld& fld, const int* coeffs, int n, int x) {
    int acc = 0;
    for (int i = n - 1; i >= 0; --i) acc = fld.add(fld.mul(acc, x), coeffs[i]);
    return acc;
}

template <class Fld>
long affine_count_genus2_in(const Fld& fld, const Genus2Model& m) {
    long total = 0;
    const long n = fld.order();
    for (int x = 0; x < n; ++x) {
        total += fld.count_quadratic_solutions(eval_poly(fld, m.h.data(), 4, x),
                                               eval_poly(fld, m.f.data(), 7, x));
    }
    return total;
}

template <class Fld>
long affine_count_elliptic_in(const Fld& fld, const EllipticModel& m) {
    long total = 0;
    const long n = fld.order();
    const int hc[2] = {m.a3, m.a1};
    const int fc[4] = {m.a6, m.a4, m.a2, 1};
    for (int x = 0; x < n; ++x) {
        total += fld.count_quadratic_solutions(eval_poly(fld, hc, 2, x),
                                               eval_poly(fld, fc, 4, x));
    }
    return total;
}

long ceil_sqrt_long(long n) {
    long s = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s * s == n ? s : s + 1;
}

bool weil_admissible_long(long q, long m, long a1, long a2) {
    if (std::abs(a1) > 2 * m) return false;
    long lo = ceil_sqrt_long(4 * a1 * a1 * q) - 2 * q;
    long hi = (a1 * a1) / 4 + 2 * q;
    return lo <= a2 && a2 <= hi;
}

uint64_t pow_u64(long base, unsigned exp) {
    uint64_t out = 1;
    for (unsigned i = 0; i < exp; ++i) out *= static_cast<uint64_t>(base);
    return out;
}

unsigned thread_budget() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const char* raw = std::getenv("EXTREMAL_THREADS");
    if (raw == nullptr || *raw == '\0') return std::min(hw, 64u);
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v <= 0) return 1;
    return static_cast<unsigned>(std::min<long>(v, 64));
}

void append_int(std::string& out, long v) { out += std::to_string(v); }

void append_labels(std::string& out, const int* labels, int n) {
    for (int i = 0; i < n; ++i) {
        if (i) out += ';';
        append_int(out, labels[i]);
    }
}

struct ChunkResult {
    unsigned long long count = 0;
    bool any = false;
    long min_jac = 0, max_jac = 0, min_n1 = 0, max_n1 = 0;
    CensusRow min_jac_row, max_jac_row, min_n1_row, max_n1_row;
    std::string census;
    std::exception_ptr error;
};

}  // namespace

bool operator==(const CensusRow& x, const CensusRow& y) {
    return x.q == y.q && x.h == y.h && x.f == y.f && x.n1 == y.n1 && x.n2 == y.n2 &&
           x.a1 == y.a1 && x.a2 == y.a2 && x.jac == y.jac;
}

bool operator!=(const CensusRow& x, const CensusRow& y) { return !(x == y); }

std::string census_header() { return "q,h,f,N1,N2,a1,a2,jac"; }

std::string to_csv_line(const CensusRow& row) {
    std::string out;
    append_int(out, row.q);
    out += ',';
    append_labels(out, row.h.data(), static_cast<int>(row.h.size()));
    out += ',';
    append_labels(out, row.f.data(), static_cast<int>(row.f.size()));
    out += ',';
    append_int(out, row.n1);
    out += ',';
    append_int(out, row.n2);
    out += ',';
    out += row.a1.get_str();
    out += ',';
    out += row.a2.get_str();
    out += ',';
    out += row.jac.get_str();
    return out;
}

CensusRow parse_census_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    if (fields.size() != 8) throw std::invalid_argument("census line needs 8 fields: " + line);
    auto labels = [](const std::string& s) {
        std::vector<int> out;
        std::string piece;
        std::istringstream in(s);
        while (std::getline(in, piece, ';')) out.push_back(std::stoi(piece));
        return out;
    };
    CensusRow row;
    row.q = std::stol(fields[0]);
    row.h = labels(fields[1]);
    row.f = labels(fields[2]);
    row.n1 = std::stol(fields[3]);
    row.n2 = std::stol(fields[4]);
    row.a1 = Integer(fields[5]);
    row.a2 = Integer(fields[6]);
    row.jac = Integer(fields[7]);
    return row;
}

namespace {

Integer order_from_spec(const FieldSpec& spec) {
    Integer q;
    mpz_pow_ui(q.get_mpz_t(), spec.p.get_mpz_t(), spec.e);
    return q;
}

}  // namespace

OracleContext::OracleContext(const FieldSpec& spec)
    : pp_(factor_prime_power(order_from_spec(spec))), base_(spec), ext_(base_) {}

bool OracleContext::accept_genus2(const Genus2Model& model) const {
    SmallPoly h = poly_from(model.h.data(), 4);
    SmallPoly f = poly_from(model.f.data(), 7);
    if (base_.p() != 2) {
        if (h.deg >= 0) return false;
        if (f.deg != 5 && f.deg != 6) return false;
        return gcd_is_constant(base_, f, derivative(base_, f));
    }
    if (h.deg < 0) return false;
    if (h.deg != 3 && f.deg < 5) return false;
    // Second chart at u = 0: hat-h = h3 + h2 u + ..., hat-f = f6 + f5 u + ...
    if (model.h[3] == 0) {
        int h2 = model.h[2];
        int f5 = model.f[5];
        int f6 = model.f[6];
        if (h2 != 0) {
            if (base_.mul(f5, f5) == base_.mul(f6, base_.mul(h2, h2))) return false;
        } else if (f5 == 0) {
            return false;
        }
    }
    SmallPoly hp = derivative(base_, h);
    SmallPoly s = poly_add(base_, poly_mul(base_, derivative(base_, f), derivative(base_, f)),
                           poly_mul(base_, f, poly_mul(base_, hp, hp)));
    return gcd_is_constant(base_, h, s);
}

bool OracleContext::elliptic_nonsingular(const EllipticModel& m) const {
    const Field& fld = base_;
    auto s = [&](long k) { return scalar_label(fld, k); };
    int b2 = fld.add(fld.mul(m.a1, m.a1), fld.mul(s(4), m.a2));
    int b4 = fld.add(fld.mul(s(2), m.a4), fld.mul(m.a1, m.a3));
    int b6 = fld.add(fld.mul(m.a3, m.a3), fld.mul(s(4), m.a6));
    int b8 = fld.mul(fld.mul(m.a1, m.a1), m.a6);
    b8 = fld.add(b8, fld.mul(s(4), fld.mul(m.a2, m.a6)));
    b8 = fld.sub(b8, fld.mul(m.a1, fld.mul(m.a3, m.a4)));
    b8 = fld.add(b8, fld.mul(m.a2, fld.mul(m.a3, m.a3)));
    b8 = fld.sub(b8, fld.mul(m.a4, m.a4));
    int disc = fld.neg(fld.mul(fld.mul(b2, b2), b8));
    disc = fld.sub(disc, fld.mul(s(8), fld.mul(b4, fld.mul(b4, b4))));
    disc = fld.sub(disc, fld.mul(s(27), fld.mul(b6, b6)));
    disc = fld.add(disc, fld.mul(s(9), fld.mul(b2, fld.mul(b4, b6))));
    return disc != 0;
}

bool OracleContext::elliptic_singular_bruteforce(const EllipticModel& m) const {
    const Field& fld = base_;
    auto s = [&](long k) { return scalar_label(fld, k); };
    const int hc[2] = {m.a3, m.a1};
    const int fc[4] = {m.a6, m.a4, m.a2, 1};
    for (int x = 0; x < fld.order(); ++x) {
        int hx = eval_poly(fld, hc, 2, x);
        int cx = eval_poly(fld, fc, 4, x);
        // C'(x) = 3x^2 + 2 a2 x + a4
        int cpx = fld.add(fld.mul(s(3), fld.mul(x, x)),
                          fld.add(fld.mul(s(2), fld.mul(m.a2, x)), m.a4));
        for (int y = 0; y < fld.order(); ++y) {
            bool on_curve = fld.add(fld.mul(y, y), fld.mul(hx, y)) == cx;
            bool dy = fld.add(fld.add(y, y), hx) == 0;
            bool dx = fld.mul(m.a1, y) == cpx;
            if (on_curve && dy && dx) return true;
        }
    }
    return false;
}

long OracleContext::affine_genus2(const Genus2Model& model, bool extension) const {
    return extension ? affine_count_genus2_in(ext_, model) : affine_count_genus2_in(base_, model);
}

long OracleContext::affine_elliptic(const EllipticModel& model, bool extension) const {
    return extension ? affine_count_elliptic_in(ext_, model)
                     : affine_count_elliptic_in(base_, model);
}

long OracleContext::count_genus2(const Genus2Model& model, CountingField cf) const {
    if (!accept_genus2(model)) throw std::invalid_argument("model is not an accepted genus-2 curve");
    bool extension = cf == CountingField::QuadraticExtension;
    long infinity = extension ? ext_.count_quadratic_solutions(model.h[3], model.f[6])
                              : base_.count_quadratic_solutions(model.h[3], model.f[6]);
    return affine_genus2(model, extension) + infinity;
}

long OracleContext::count_elliptic(const EllipticModel& model, CountingField cf) const {
    if (!elliptic_nonsingular(model)) throw std::invalid_argument("singular Weierstrass model");
    return affine_elliptic(model, cf == CountingField::QuadraticExtension) + 1;
}

CurveInvariants OracleContext::derive_invariants(long n1, long n2) const {
    const long q = base_.order();
    CurveInvariants inv;
    inv.n1 = n1;
    inv.n2 = n2;
    long a1 = n1 - (q + 1);
    if (((a1 * a1 + n2) & 1L) != ((q * q + 1) & 1L)) {
        throw std::logic_error("parity invariant a1^2 + N2 = q^2 + 1 (mod 2) violated");
    }
    long a2 = 2 * q + (a1 * a1 + n2 - q * q - 1 - 4 * q) / 2;
    if (!weil_admissible_long(q, pp_.m.get_si(), a1, a2)) {
        throw std::logic_error("counted (a1, a2) fails Weil admissibility");
    }
    long jac = q * q + 1 + (q + 1) * a1 + a2;
    if (2 * jac != n1 * n1 + n2 - 2 * q) {
        throw std::logic_error("jacobian-order formulas disagree");
    }
    inv.a1 = a1;
    inv.a2 = a2;
    inv.jac = jac;
    return inv;
}

CurveInvariants OracleContext::invariants_genus2(const Genus2Model& model) const {
    if (!accept_genus2(model)) throw std::invalid_argument("model is not an accepted genus-2 curve");
    long inf_base = base_.count_quadratic_solutions(model.h[3], model.f[6]);
    long inf_ext = ext_.count_quadratic_solutions(model.h[3], model.f[6]);
    return derive_invariants(affine_genus2(model, false) + inf_base,
                             affine_genus2(model, true) + inf_ext);
}

long count_points_genus2(const FieldSpec& spec, const Genus2Model& model, CountingField field) {
    return OracleContext(spec).count_genus2(model, field);
}

long count_points_elliptic(const FieldSpec& spec, const EllipticModel& model, CountingField field) {
    return OracleContext(spec).count_elliptic(model, field);
}

CurveInvariants curve_invariants(const FieldSpec& spec, const Genus2Model& model) {
    return OracleContext(spec).invariants_genus2(model);
}

// Shared driver for empirical_extrema and emit_census. The model space is
// linearized as slot * f_space + f_label (slots are h labels); workers take
// contiguous index ranges and merge in ascending order, which keeps the
// first-encountered (smallest-encoding) representative and makes the result
// independent of the thread count.
struct OracleSweep {
    const OracleContext& ctx;
    int genus;
    bool emit;

    uint64_t f_space = 0;
    uint64_t slots = 0;

    OracleSweep(const OracleContext& c, int g, bool e) : ctx(c), genus(g), emit(e) {
        const long q = ctx.base().order();
        if (genus == 2) {
            f_space = pow_u64(q, 7);
            slots = ctx.base().p() == 2 ? pow_u64(q, 4) - 1 : 1;
        } else {
            f_space = pow_u64(q, 3);
            slots = pow_u64(q, 2);
        }
    }

    long slot_to_h_label(uint64_t slot) const {
        if (genus == 2) return ctx.base().p() == 2 ? static_cast<long>(slot) + 1 : 0;
        return static_cast<long>(slot);
    }

    void digits_of(long label, int* out, int n) const {
        const long q = ctx.base().order();
        for (int i = 0; i < n; ++i) {
            out[i] = static_cast<int>(label % q);
            label /= q;
        }
    }

    void consider(ChunkResult& out, const CurveInvariants& inv, const int* h, int nh,
                  const int* f, int nf, const Integer& a2_col, long jac_long) const {
        auto make_row = [&]() {
            CensusRow row;
            row.q = ctx.base().order();
            row.h.assign(h, h + nh);
            row.f.assign(f, f + nf);
            row.n1 = inv.n1;
            row.n2 = inv.n2;
            row.a1 = inv.a1;
            row.a2 = a2_col;
            row.jac = jac_long;
            return row;
        };
        if (!out.any) {
            out.any = true;
            out.min_jac = out.max_jac = jac_long;
            out.min_n1 = out.max_n1 = inv.n1;
            out.min_jac_row = out.max_jac_row = out.min_n1_row = out.max_n1_row = make_row();
        } else {
            if (jac_long < out.min_jac) {
                out.min_jac = jac_long;
                out.min_jac_row = make_row();
            }
            if (jac_long > out.max_jac) {
                out.max_jac = jac_long;
                out.max_jac_row = make_row();
            }
            if (inv.n1 < out.min_n1) {
                out.min_n1 = inv.n1;
                out.min_n1_row = make_row();
            }
            if (inv.n1 > out.max_n1) {
                out.max_n1 = inv.n1;
                out.max_n1_row = make_row();
            }
        }
        ++out.count;
        if (emit) {
            CensusRow row = make_row();
            out.census += to_csv_line(row);
            out.census += '\n';
        }
    }

    void run_range(uint64_t lo, uint64_t hi, ChunkResult& out) const {
        uint64_t idx = lo;
        while (idx < hi) {
            uint64_t slot = idx / f_space;
            uint64_t f_begin = idx % f_space;
            uint64_t f_end = std::min<uint64_t>(f_space, f_begin + (hi - idx));
            if (genus == 2) {
                run_genus2_slot(slot, f_begin, f_end, out);
            } else {
                run_genus1_slot(slot, f_begin, f_end, out);
            }
            idx += f_end - f_begin;
        }
    }

    void run_genus2_slot(uint64_t slot, uint64_t f_begin, uint64_t f_end, ChunkResult& out) const {
        const long q = ctx.base().order();
        Genus2Model m;
        digits_of(slot_to_h_label(slot), m.h.data(), 4);
        int fd[7];
        digits_of(static_cast<long>(f_begin), fd, 7);
        for (uint64_t f = f_begin; f < f_end; ++f) {
            std::copy(fd, fd + 7, m.f.begin());
            if (ctx.accept_genus2(m)) {
                long inf_base = ctx.base().count_quadratic_solutions(m.h[3], m.f[6]);
                long inf_ext = ctx.ext().count_quadratic_solutions(m.h[3], m.f[6]);
                CurveInvariants inv = ctx.derive_invariants(
                    ctx.affine_genus2(m, false) + inf_base, ctx.affine_genus2(m, true) + inf_ext);
                consider(out, inv, m.h.data(), 4, m.f.data(), 7, inv.a2, inv.jac.get_si());
            }
            for (int i = 0; i < 7; ++i) {  // base-q counter
                if (++fd[i] < q) break;
                fd[i] = 0;
            }
        }
    }

    void run_genus1_slot(uint64_t slot, uint64_t f_begin, uint64_t f_end, ChunkResult& out) const {
        const long q = ctx.base().order();
        const long m_bound = ctx.pp().m.get_si();
        EllipticModel m;
        int hd[2];
        digits_of(slot_to_h_label(slot), hd, 2);
        m.a3 = hd[0];
        m.a1 = hd[1];
        for (uint64_t f = f_begin; f < f_end; ++f) {
            long label = static_cast<long>(f);
            m.a6 = static_cast<int>(label % q);
            m.a4 = static_cast<int>((label / q) % q);
            m.a2 = static_cast<int>(label / (q * q));
            if (ctx.elliptic_nonsingular(m)) {
                long n1 = ctx.affine_elliptic(m, false) + 1;
                long n2 = ctx.affine_elliptic(m, true) + 1;
                long a1 = n1 - (q + 1);
                if (n2 != q * q + 1 - (a1 * a1 - 2 * q)) {
                    throw std::logic_error("elliptic zeta identity for N2 violated");
                }
                if (std::abs(a1) > m_bound) {
                    throw std::logic_error("elliptic trace exceeds the Weil bound");
                }
                CurveInvariants inv;
                inv.n1 = n1;
                inv.n2 = n2;
                inv.a1 = a1;
                inv.a2 = q;
                inv.jac = n1;
                const int hc[2] = {m.a3, m.a1};
                const int fc[4] = {m.a6, m.a4, m.a2, 1};
                consider(out, inv, hc, 2, fc, 4, Integer(q), n1);
            }
        }
    }
};

namespace {

std::vector<ChunkResult> run_sweep(const OracleContext& ctx, int genus, bool emit) {
    if (genus != 1 && genus != 2) throw std::domain_error("genus must be 1 or 2");
    if (genus == 2) {
        long q = ctx.base().order();
        if (q != 2 && q != 3 && q != 4 && q != 5 && q != 7) {
            throw std::domain_error("genus-2 sweep supports q in {2, 3, 4, 5, 7}");
        }
    }
    OracleSweep sweep(ctx, genus, emit);
    const uint64_t total = sweep.slots * sweep.f_space;
    unsigned threads = thread_budget();
    if (static_cast<uint64_t>(threads) > total) threads = static_cast<unsigned>(total);
    if (threads == 0) threads = 1;

    std::vector<ChunkResult> results(threads);
    if (threads == 1) {
        sweep.run_range(0, total, results[0]);
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const uint64_t step = total / threads;
    const uint64_t rem = total % threads;
    uint64_t lo = 0;
    for (unsigned i = 0; i < threads; ++i) {
        uint64_t hi = lo + step + (i < rem ? 1 : 0);
        pool.emplace_back([&, lo, hi, i]() {
            try {
                sweep.run_range(lo, hi, results[i]);
            } catch (...) {
                results[i].error = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& t : pool) t.join();
    for (auto& r : results) {
        if (r.error) std::rethrow_exception(r.error);
    }
    return results;
}

}  // namespace

EmpiricalExtrema empirical_extrema(const FieldSpec& spec, int genus) {
    OracleContext ctx(spec);
    auto chunks = run_sweep(ctx, genus, false);
    EmpiricalExtrema out;
    bool any = false;
    long min_jac = 0, max_jac = 0;
    for (const auto& r : chunks) {
        out.model_count += r.count;
        if (!r.any) continue;
        if (!any) {
            any = true;
            min_jac = r.min_jac;
            max_jac = r.max_jac;
            out.min_n1 = r.min_n1;
            out.max_n1 = r.max_n1;
            out.min_jac_row = r.min_jac_row;
            out.max_jac_row = r.max_jac_row;
            out.min_n1_row = r.min_n1_row;
            out.max_n1_row = r.max_n1_row;
            continue;
        }
        if (r.min_jac < min_jac) {
            min_jac = r.min_jac;
            out.min_jac_row = r.min_jac_row;
        }
        if (r.max_jac > max_jac) {
            max_jac = r.max_jac;
            out.max_jac_row = r.max_jac_row;
        }
        if (r.min_n1 < out.min_n1) {
            out.min_n1 = r.min_n1;
            out.min_n1_row = r.min_n1_row;
        }
        if (r.max_n1 > out.max_n1) {
            out.max_n1 = r.max_n1;
            out.max_n1_row = r.max_n1_row;
        }
    }
    if (!any) throw std::logic_error("sweep accepted no models");
    out.min_jac = min_jac;
    out.max_jac = max_jac;
    return out;
}

unsigned long long emit_census(const FieldSpec& spec, int genus, std::ostream& sink) {
    OracleContext ctx(spec);
    auto chunks = run_sweep(ctx, genus, true);
    sink << census_header() << '\n';
    unsigned long long rows = 0;
    for (const auto& r : chunks) {
        sink << r.census;
        rows += r.count;
    }
    if (!sink) throw std::ios_base::failure("census sink write failure");
    return rows;
}

}  // namespace jacext
