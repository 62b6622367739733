#pragma once

#include <string>

#include "pdmosc/algebra.hpp"

namespace pdmosc {

/// Serializes with 17 significant digits so every double round-trips
/// exactly; identical inputs give byte-identical output except the
/// timestamp field.
std::string to_json(const VerificationReport& rep);

/// Flattened relations table: id,residual,tolerance,pass,note.
std::string to_csv(const VerificationReport& rep);

/// Table of n, E_n plus a derived-parameter header block.
std::string spectrum_json(const OscParams& p, Model model, int nmax);
std::string spectrum_csv(const OscParams& p, Model model, int nmax);

/// %.17g with C-locale decimal point.
std::string format_double(double v);

}  // namespace pdmosc
