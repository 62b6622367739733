#include "pdmosc/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "pdmosc/states.hpp"

namespace pdmosc {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void append_params(std::ostringstream& os, const OscParams& p) {
  os << "\"params\": {\"omega\": " << format_double(p.omega)
     << ", \"alpha\": " << format_double(p.alpha) << ", \"L\": " << format_double(p.L)
     << ", \"Delta\": " << format_double(p.Delta)
     << ", \"lambda\": " << format_double(p.lambda);
  if (p.s) os << ", \"s\": " << format_double(*p.s);
  os << ", \"one_dim\": " << (p.one_dim ? "true" : "false") << "}";
}

}  // namespace

std::string to_json(const VerificationReport& rep) {
  std::ostringstream os;
  os << "{\n  ";
  append_params(os, rep.params);
  os << ",\n  \"basis_size\": " << rep.basis_size << ",\n  \"trusted\": " << rep.trusted_size
     << ",\n  \"grid\": \"" << json_escape(rep.grid_descriptor) << "\",\n  \"relations\": [";
  for (std::size_t i = 0; i < rep.residuals.size(); ++i) {
    const auto& r = rep.residuals[i];
    os << (i ? ",\n    " : "\n    ") << "{\"id\": \"" << json_escape(r.id) << "\", \"residual\": ";
    if (std::isfinite(r.residual))
      os << format_double(r.residual);
    else
      os << "null";
    os << ", \"tolerance\": ";
    if (std::isfinite(r.tolerance))
      os << format_double(r.tolerance);
    else
      os << "null";
    os << ", \"pass\": " << (r.pass ? "true" : "false");
    if (r.note) os << ", \"note\": \"" << json_escape(*r.note) << "\"";
    os << "}";
  }
  os << "\n  ],\n  \"timestamp\": \"" << json_escape(rep.timestamp) << "\"\n}\n";
  return os.str();
}

std::string to_csv(const VerificationReport& rep) {
  std::ostringstream os;
  os << "id,residual,tolerance,pass,note\n";
  for (const auto& r : rep.residuals) {
    os << r.id << ",";
    if (std::isfinite(r.residual)) os << format_double(r.residual);
    os << ",";
    if (std::isfinite(r.tolerance)) os << format_double(r.tolerance);
    os << "," << (r.pass ? "true" : "false") << "," << (r.note ? *r.note : "") << "\n";
  }
  return os.str();
}

namespace {

void append_header_values(std::ostringstream& os, const OscParams& p, bool json) {
  LowestWeights w = lowest_weights(p);
  const char* q = json ? "\"" : "";
  const char* sep = json ? ": " : ",";
  os << q << "k" << q << sep << format_double(w.k);
  if (w.p0) os << (json ? ", " : "\n") << q << "p0" << q << sep << format_double(*w.p0);
}

}  // namespace

std::string spectrum_json(const OscParams& p, Model model, int nmax) {
  std::ostringstream os;
  os << "{\n  ";
  append_params(os, p);
  os << ",\n  ";
  append_header_values(os, p, true);
  os << ",\n  \"levels\": [";
  for (int n = 0; n <= nmax; ++n) {
    os << (n ? ",\n    " : "\n    ") << "{\"n\": " << n
       << ", \"E\": " << format_double(energy(p, model, n)) << "}";
  }
  os << "\n  ]\n}\n";
  return os.str();
}

std::string spectrum_csv(const OscParams& p, Model model, int nmax) {
  std::ostringstream os;
  os << "omega," << format_double(p.omega) << "\nalpha," << format_double(p.alpha) << "\nL,"
     << format_double(p.L) << "\nDelta," << format_double(p.Delta) << "\nlambda,"
     << format_double(p.lambda) << "\n";
  if (p.s) os << "s," << format_double(*p.s) << "\n";
  append_header_values(os, p, false);
  os << "\nn,E\n";
  for (int n = 0; n <= nmax; ++n)
    os << n << "," << format_double(energy(p, model, n)) << "\n";
  return os.str();
}

}  // namespace pdmosc
