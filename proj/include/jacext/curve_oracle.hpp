#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "jacext/finite_field.hpp"
#include "jacext/surface_enum.hpp"

namespace jacext {

enum class CountingField { Base, QuadraticExtension };

// y^2 + h(x)y = f(x) with deg h <= 3, deg f <= 6; coefficients are field
// labels, ascending by power. Acceptance (see accept_genus2):
//   odd p:  h = 0 and f squarefree of degree 5 or 6;
//   p = 2:  h != 0, max(2 deg h, deg f) in {5, 6}, and no singular point on
//           either affine chart (checked over the algebraic closure via
//           gcd(h, f'^2 + f h'^2) together with the u = 0 test on the second
//           chart v^2 + u^3 h(1/u) v = u^6 f(1/u)).
struct Genus2Model {
    std::array<int, 4> h{};
    std::array<int, 7> f{};
};

// Long Weierstrass model y^2 + a1xy + a3y = x^3 + a2x^2 + a4x + a6.
struct EllipticModel {
    int a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
};

// Point counts over F_q and F_{q^2} and the derived Weil coefficients.
// Construction cross-checks the parity identity a1^2 + N2 = q^2 + 1 (mod 2),
// Weil admissibility of (a1, a2), and the agreement of the two jacobian-order
// formulas q^2 + 1 + (q+1)a1 + a2 = (N1^2 + N2)/2 - q; any violation is an
// enumeration bug and throws std::logic_error rather than being skipped.
struct CurveInvariants {
    long n1 = 0;
    long n2 = 0;
    Integer a1;
    Integer a2;
    Integer jac;
};

// One census line. h and f hold the coefficient labels ascending by power
// (genus 1 reuses the columns with h = {a3, a1}, f = {a6, a4, a2, 1}, the
// census a2 column holding q and jac = N1).
struct CensusRow {
    long q = 0;
    std::vector<int> h;
    std::vector<int> f;
    long n1 = 0;
    long n2 = 0;
    Integer a1;
    Integer a2;
    Integer jac;
};

bool operator==(const CensusRow& x, const CensusRow& y);
bool operator!=(const CensusRow& x, const CensusRow& y);

// "q,h,f,N1,N2,a1,a2,jac"; labels inside h and f are semicolon-joined.
std::string census_header();
std::string to_csv_line(const CensusRow& row);
CensusRow parse_census_line(const std::string& line);

struct EmpiricalExtrema {
    unsigned long long model_count = 0;
    Integer min_jac;
    Integer max_jac;
    long min_n1 = 0;
    long max_n1 = 0;
    CensusRow min_jac_row;
    CensusRow max_jac_row;
    CensusRow min_n1_row;
    CensusRow max_n1_row;
};

// Reusable handle bundling the base field, its quadratic extension, and the
// PrimePower data; the free functions below construct one per call, so loops
// should hold a context directly.
class OracleContext {
  public:
    explicit OracleContext(const FieldSpec& spec);

    const Field& base() const { return base_; }
    const QuadExt& ext() const { return ext_; }
    const PrimePower& pp() const { return pp_; }

    bool accept_genus2(const Genus2Model& model) const;
    bool elliptic_nonsingular(const EllipticModel& model) const;  // disc != 0
    bool elliptic_singular_bruteforce(const EllipticModel& model) const;

    // pre: model accepted / nonsingular (throws std::invalid_argument).
    long count_genus2(const Genus2Model& model, CountingField cf) const;
    long count_elliptic(const EllipticModel& model, CountingField cf) const;
    CurveInvariants invariants_genus2(const Genus2Model& model) const;

  private:
    friend struct OracleSweep;

    long affine_genus2(const Genus2Model& model, bool extension) const;
    long affine_elliptic(const EllipticModel& model, bool extension) const;
    CurveInvariants derive_invariants(long n1, long n2) const;

    PrimePower pp_;
    Field base_;
    QuadExt ext_;
};

long count_points_genus2(const FieldSpec& spec, const Genus2Model& model, CountingField field);
long count_points_elliptic(const FieldSpec& spec, const EllipticModel& model, CountingField field);
CurveInvariants curve_invariants(const FieldSpec& spec, const Genus2Model& model);

// Exhaustive sweep over every accepted model, in ascending (h label, f label)
// order -- the integer labels sum(c_i q^i) of the coefficient tuples; for
// genus 1 the labels are those of the census h/f encodings. Extremum
// representatives are the first models encountered, i.e. the smallest census
// encodings. genus 2 requires q in {2,3,4,5,7}; genus 1 any base field
// (q <= 49; large q is slow -- the F_{q^2} counting visits q^2 points per
// model). The environment variable EXTREMAL_THREADS caps the worker count;
// results are bit-identical to the single-threaded sweep.
EmpiricalExtrema empirical_extrema(const FieldSpec& spec, int genus);

// Streams header + one CSV line per accepted model (same order) and returns
// the row count. Parallel runs buffer per-partition and concatenate in
// partition order, so the bytes never depend on the thread count.
unsigned long long emit_census(const FieldSpec& spec, int genus, std::ostream& sink);

}  // namespace jacext
