#pragma once

#include <string>

#include "hyperzero/oracle.hpp"

namespace hz {

std::string read_file(const std::string& path);   // Usage error if unreadable
void write_file(const std::string& path, const std::string& text);

// 12 significant digits
std::string fmt_real(double x);
std::string fmt_complex(cd z);  // "3+0i"

// {"lambda": [[re, im], ...]} or {"beta": ...}; key is "lambda" or "beta".
Weights parse_weights_json(const std::string& text, const std::string& key, int n);
std::string weights_json(const Weights& w, const std::string& key);

// "0.5", "0.5+0.1i", "-2i"
cd parse_complex(const std::string& s);
// A path to a weights document, or a scalar applied to every slot.
Weights load_weights_arg(const std::string& arg, const std::string& key, int n);

// config_bits,re,im for every nonzero entry; bit string lists vertex 0 first.
std::string measure_csv(const ComplexMeasure& mu);
std::string config_bits(Config c, int n);

}  // namespace hz
