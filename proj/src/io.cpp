#include "hyperzero/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"

namespace hz {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Usage, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  // write-then-rename so readers never see a partial file
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error(ErrorKind::Usage, "cannot write " + path);
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

std::string fmt_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);  // no "-0"
  return buf;
}

std::string fmt_complex(cd z) {
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  return fmt_real(z.real()) + (std::signbit(im) ? "-" : "+") + fmt_real(std::abs(im)) + "i";
}

Weights parse_weights_json(const std::string& text, const std::string& key, int n) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Schema, std::string("weights: malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains(key) || !doc[key].is_array())
    throw Error(ErrorKind::Schema, "weights: expected an object with array \"" + key + "\"");
  Weights w;
  for (const auto& item : doc[key]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
      throw Error(ErrorKind::Schema, "weights: each entry must be [re, im]");
    w.emplace_back(item[0].get<double>(), item[1].get<double>());
  }
  if (n >= 0 && static_cast<int>(w.size()) != n)
    throw Error(ErrorKind::Schema, "weights: expected " + std::to_string(n) + " entries, got " + std::to_string(w.size()));
  return w;
}

std::string weights_json(const Weights& w, const std::string& key) {
  nlohmann::json arr = nlohmann::json::array();
  for (const cd& z : w) arr.push_back({z.real(), z.imag()});
  nlohmann::json doc;
  doc[key] = arr;
  return doc.dump() + "\n";
}

cd parse_complex(const std::string& s) {
  static const std::regex num(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  static const std::regex full(R"(\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*)");
  std::smatch m;
  if (std::regex_match(s, m, num)) return std::stod(s);
  static const std::regex pure_im(R"(\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i\s*)");
  if (std::regex_match(s, m, pure_im)) {
    const std::string c = m[1].str();
    if (c.empty() || c == "+") return cd(0.0, 1.0);
    if (c == "-") return cd(0.0, -1.0);
    return cd(0.0, std::stod(c));
  }
  if (std::regex_match(s, m, full) && m[1].matched && m[2].matched) {
    const double re = std::stod(m[1].str());
    const double mag = m[3].matched ? std::stod(m[3].str()) : 1.0;
    return cd(re, m[2].str() == "-" ? -mag : mag);
  }
  throw Error(ErrorKind::Usage, "not a number: " + s);
}

Weights load_weights_arg(const std::string& arg, const std::string& key, int n) {
  if (std::filesystem::is_regular_file(arg)) return parse_weights_json(read_file(arg), key, n);
  return Weights(n, parse_complex(arg));
}

std::string config_bits(Config c, int n) {
  std::string s(n, '0');
  for (int v = 0; v < n; ++v)
    if (bit(c, v)) s[v] = '1';
  return s;
}

std::string measure_csv(const ComplexMeasure& mu) {
  std::string out = "config_bits,re,im\n";
  for (std::size_t c = 0; c < mu.w.size(); ++c) {
    if (mu.w[c] == cd(0.0)) continue;
    out += config_bits(c, mu.n) + "," + fmt_real(mu.w[c].real()) + "," + fmt_real(mu.w[c].imag()) + "\n";
  }
  return out;
}

}  // namespace hz
