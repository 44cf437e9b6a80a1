#pragma once

#include <string>

#include "hyperfrac/coded_family.hpp"
#include "hyperfrac/compact_set.hpp"
#include "hyperfrac/theorems.hpp"

namespace hyperfrac {

/// Static SVG views. Geometry is deterministic; coordinates are the only
/// place doubles are allowed.
std::string render_set_svg(const CompactSet1D& s);
std::string render_set_svg(const CompactSetD& s);
std::string render_code_svg(const Code& c);  // one bar row per level
std::string render_thm41_svg(const Thm41Certificate& c);
std::string render_prop32_svg(const AnnulusConstruction& c);
std::string render_prop33_svg(const StrongPorosityWitness& w);

}  // namespace hyperfrac
