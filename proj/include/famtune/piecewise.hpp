#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "famtune/common.hpp"
#include "famtune/tape.hpp"

namespace famtune {

/// Piecewise-constant real function on [lo, hi] with finitely many
/// breakpoints. Piece i covers [b_i, b_{i+1}) — half-open — except the last,
/// which is closed at hi. Adjacent pieces with exactly equal values are
/// coalesced on construction, so the stored breakpoints are the genuine
/// discontinuities.
class PiecewiseConstant {
public:
    /// Validates and canonicalizes. Breakpoints must be strictly increasing
    /// and interior to (lo, hi); values.size() == breakpoints.size() + 1; all
    /// entries finite.
    PiecewiseConstant(double lo, double hi, std::vector<double> breakpoints,
                      std::vector<double> values);

    static PiecewiseConstant constant(double lo, double hi, double value) {
        return PiecewiseConstant(lo, hi, {}, {value});
    }

    Interval domain() const { return {lo_, hi_}; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    std::size_t piece_count() const { return values_.size(); }
    std::span<const double> breakpoints() const { return breaks_; }
    std::span<const double> values() const { return values_; }

    /// Left edge / right edge of piece i.
    double piece_lo(std::size_t i) const { return i == 0 ? lo_ : breaks_[i - 1]; }
    double piece_hi(std::size_t i) const { return i == breaks_.size() ? hi_ : breaks_[i]; }
    double piece_len(std::size_t i) const { return piece_hi(i) - piece_lo(i); }

    /// Index of the piece containing rho under the half-open convention.
    std::size_t piece_index(double rho) const;

    /// Value at rho; throws std::domain_error outside [lo, hi].
    double eval(double rho) const;

    struct Argmax {
        double value;           // maximal value
        double lo, hi;          // leftmost maximizing piece [lo, hi)
        double representative;  // midpoint of that piece
    };

    /// Leftmost maximizing piece.
    Argmax argmax() const;

    /// log ∫ exp(lambda · f) over the domain, i.e. log Σ len_i·exp(lambda·v_i),
    /// computed with max-shift stabilization. Requires lambda >= 0.
    double exp_mass(double lambda) const;

    /// Samples rho with density proportional to exp(lambda · f): Gumbel-max
    /// over per-piece log-masses, then uniform within the winning piece.
    double exp_sample(double lambda, Rng& rng) const;
    double exp_sample(double lambda, const RandomTape& tape) const;

    /// Breakpoints between pieces of unequal value. Canonicalization makes
    /// this exactly the stored breakpoint list.
    std::vector<double> discontinuities() const {
        return std::vector<double>(breaks_.begin(), breaks_.end());
    }

    friend bool operator==(const PiecewiseConstant& a, const PiecewiseConstant& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.breaks_ == b.breaks_ &&
               a.values_ == b.values_;
    }

private:
    double lo_, hi_;
    std::vector<double> breaks_;
    std::vector<double> values_;
};

/// Pointwise sum over a common domain. Breakpoints are the deduplicated
/// sorted union; each output piece value is the fresh sum of the component
/// values in input order (so it equals Σ eval(f_i, ·) bit for bit).
PiecewiseConstant merge_sum(std::span<const PiecewiseConstant> fs);
PiecewiseConstant merge_sum(const PiecewiseConstant& a, const PiecewiseConstant& b);

nlohmann::json piecewise_to_json(const PiecewiseConstant& f);
PiecewiseConstant piecewise_from_json(const nlohmann::json& j);

}  // namespace famtune
