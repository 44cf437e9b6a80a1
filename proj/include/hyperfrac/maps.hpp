#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hyperfrac/rational.hpp"

namespace hyperfrac {

enum class MapKind { affine, quadratic_logistic, piecewise_linear, constant };

struct Breakpoint {
    Rational x;
    Rational y;
};

/// Self-map of [0,1], one of four closed-form kinds, with its exact smallest
/// Lipschitz constant. weak_only is set when lip == 1 but every distinct
/// pair still contracts strictly (the x - x^2 map); such maps are weak
/// contractions without being contractions.
class ContractionMap {
public:
    ContractionMap() = default;  // the constant-0 map

    static ContractionMap affine(Rational a, Rational b);       // x -> a*x + b
    static ContractionMap quadratic_logistic();                 // x -> x - x^2
    static ContractionMap piecewise_linear(std::vector<Breakpoint> pts);
    static ContractionMap constant(Rational c);

    MapKind kind() const { return kind_; }
    const Rational& lip() const { return lip_; }
    bool weak_only() const { return weak_only_; }

    /// Exact image of x in [0,1]. Piecewise-linear maps extend flat beyond
    /// their covered breakpoint range.
    Rational apply(const Rational& x) const;

    // kind-specific accessors (serialization and reporting)
    const Rational& affine_a() const { return a_; }
    const Rational& affine_b() const { return b_; }
    const Rational& constant_value() const { return a_; }
    const std::vector<Breakpoint>& breakpoints() const { return pts_; }

private:
    MapKind kind_ = MapKind::constant;
    Rational a_, b_;               // affine coefficients / constant value
    std::vector<Breakpoint> pts_;  // piecewise-linear breakpoints
    Rational lip_;
    bool weak_only_ = false;
};

struct WeakCheck {
    bool ok = false;
    std::optional<std::pair<Rational, Rational>> counterexample;  // first violating pair
};

/// |f(x) - f(y)| < |x - y| for every distinct pair of S, exactly.
WeakCheck is_weak_contraction_on(const ContractionMap& f, const std::vector<Rational>& s);

/// How a piecewise-linear interpolant continues beyond its covered range.
/// Both rules hold the boundary value flat, which keeps the weak property;
/// they differ only in how the extension is read (constant tail segment vs
/// clamping the input), so evaluation is identical.
enum class InterpolantTail { constant, clamp };

/// Piecewise-linear map through the given (x_i, y_i), x_i strictly
/// increasing. Every implied slope must satisfy |slope| < 1; the builder
/// verifies this exactly and names the offending segment otherwise.
ContractionMap build_interpolant(std::vector<Breakpoint> pts, InterpolantTail tail);

struct IFS {
    std::vector<ContractionMap> maps;

    /// true iff every map has lip < 1 (Banach solver applies).
    bool strict() const;
    Rational max_lip() const;
};

}  // namespace hyperfrac
