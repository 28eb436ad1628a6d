#pragma once

/// Alternating central-binomial sums
///
///     S(n, i) = sum_{k=0}^{n} (-1)^k C(n+i, k+i) 2^-k C(2k, k)
///
/// and their closed forms: the classical even/odd evaluations at shifts 0
/// and 1, the general-shift closed form built from reciprocal Gammas at
/// half-integers, and the tabulated forms for shifts 0..3. The direct sum
/// knuth_lhs is the reference every closed form is checked against.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hypsum/hypergeometric.hpp"
#include "hypsum/rational.hpp"

namespace hypsum {

enum class Parity { Even, Odd };

/// Upper summation bound of the sum for a given parity: 2 nu or 2 nu + 1.
inline unsigned long parity_bound(unsigned long nu, Parity parity) {
    return 2 * nu + (parity == Parity::Odd ? 1 : 0);
}

class IdentityId {
public:
    enum class Kind {
        KnuthEven,
        KnuthOdd,
        RiordanEven,
        RiordanOdd,
        TheoremEven,
        TheoremOdd,
        CorollaryEven,
        CorollaryOdd,
        MasterEven,
        MasterOdd,
        GaussSecond,
    };

    constexpr IdentityId(Kind kind) : kind_(kind) {}  // NOLINT(google-explicit-constructor)

    constexpr Kind kind() const { return kind_; }

    /// Kebab-case name used on the command line and in reports.
    std::string_view name() const;
    static std::optional<IdentityId> from_name(std::string_view name);
    static const std::vector<IdentityId>& all();

    friend constexpr bool operator==(IdentityId, IdentityId) = default;

private:
    Kind kind_;
};

/// Direct term-by-term evaluation of S(n, i).
BigRational knuth_lhs(unsigned long n, unsigned long i);

struct Reduction {
    BigRational prefactor;
    SeriesSpec spec;
};

/// S(n, i) = C(n+i, i) * 2F1(-n, 1/2; 1+i; 2).
Reduction reduce_to_2f1(unsigned long n, unsigned long i);

/// General-shift closed form of S(2 nu, i) (Even) or S(2 nu + 1, i) (Odd),
/// evaluated in PiVal algebra and collapsed to a rational.
BigRational theorem_rhs(unsigned long nu, unsigned long i, Parity parity);

/// Tabulated closed forms for shifts i = 0..3; UnsupportedShift beyond.
BigRational corollary_rhs(unsigned long nu, unsigned long i, Parity parity);

/// Classical shift-0 forms: 2^-2nu C(2nu, nu) (Even) and 0 (Odd).
BigRational knuth_closed_form(unsigned long nu, Parity parity);

/// Classical shift-1 forms: 2^-2nu (2nu+1) C(2nu, nu) (Even) and
/// 2^(-2nu-1) (nu+1) C(2nu, nu) (Odd). The odd form is the one commonly
/// quoted; it does not agree with the direct sum.
BigRational riordan_closed_form(unsigned long nu, Parity parity);

/// Inclusive integer range; empty when lo > hi.
struct IntRange {
    long lo = 0;
    long hi = -1;

    bool empty() const { return lo > hi; }
    long size() const { return empty() ? 0 : hi - lo + 1; }
};

struct Grid {
    IntRange nu;
    IntRange i;
    std::vector<BigRational> alpha;
    EvalMode mode = EvalMode::exact();
};

using Value = std::variant<BigRational, double>;

struct GridPoint {
    std::optional<long> nu;
    std::optional<long> i;
    std::optional<BigRational> alpha;
};

struct VerificationReport {
    IdentityId identity;
    GridPoint point;
    Value lhs;
    Value rhs;
    EvalMode mode;
    bool matched;
};

struct VerifyOptions {
    unsigned workers = 1;
    /// Test hook: adds one to every closed-form value before comparison.
    bool corrupt_closed_form = false;
};

/// Default relative tolerance for floating comparisons.
inline constexpr double kDefaultTolerance = 1e-9;
/// Absolute floor applied to floating comparisons.
inline constexpr double kAbsoluteFloor = 1e-12;

/// |value - reference| <= max(tolerance * |reference|, kAbsoluteFloor).
bool within_tolerance(double reference, double value, double tolerance);

/// Evaluates both sides of `identity` on every grid point.
///
/// Points are ordered lexicographically by (nu, i, alpha index). Grid axes
/// an identity does not use are ignored: Knuth and Riordan identities use nu
/// only; Theorem and Corollary use nu and i; Master identities use nu as n,
/// i, and every alpha; GaussSecond uses nu as m (a = -m) and alpha as b.
/// Master points at non-half-integer alpha are compared in Float mode even
/// when the grid asks for Exact. Throws DomainError when the grid leaves the
/// identity's domain.
std::vector<VerificationReport> verify(IdentityId identity, const Grid& grid,
                                       const VerifyOptions& options = {});

}  // namespace hypsum
