#pragma once

#include <string>

#include <json.hpp>

#include "hyperfrac/compact_set.hpp"
#include "hyperfrac/hutchinson.hpp"
#include "hyperfrac/maps.hpp"
#include "hyperfrac/theorems.hpp"

namespace hyperfrac::io {

using json = nlohmann::ordered_json;

// Scalars cross the process boundary as exact strings: "p" or "p/q"
// (decimal strings are accepted on input). Doubles never enter files.
std::string scalar_string(const Rational& x);
Rational parse_scalar(const json& j);

// set files: {"kind":"points"|"intervals","dim":d,"data":[...]}
json set_to_json(const CompactSet1D& s);
json set_to_json(const CompactSetD& s);
CompactSet1D set_1d_from_json(const json& j);
CompactSetD set_d_from_json(const json& j);
int set_file_dim(const json& j);

// IFS spec files: {"maps":[{"kind":"affine","a":"1/10","b":"2/10"}, ...]}
json map_to_json(const ContractionMap& m);
ContractionMap map_from_json(const json& j);
json ifs_to_json(const IFS& ifs);
IFS ifs_from_json(const json& j);

// code files: {"entries":["p/q",...],"depth":m} (trailing zeros trimmed)
json code_to_json(const Code& c);
Code code_from_json(const json& j);

// solver report (attractor embedded as a set file object)
json attractor_report_to_json(const AttractorResult& r);

// certificates; "type" discriminates on load
json thm41_to_json(const Thm41Certificate& c);
Thm41Certificate thm41_from_json(const json& j);
json prop32_to_json(const AnnulusConstruction& c);
AnnulusConstruction prop32_from_json(const json& j);
json prop33_to_json(const StrongPorosityWitness& w);
StrongPorosityWitness prop33_from_json(const json& j);

json load_json(const std::string& path);
void save_json(const std::string& path, const json& j);

}  // namespace hyperfrac::io
