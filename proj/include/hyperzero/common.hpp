#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hz {

using cd = std::complex<double>;
using Config = std::uint64_t;  // bit v is the spin of vertex v
using Weights = std::vector<cd>;

// Values double as CLI exit codes.
enum class ErrorKind {
  Usage = 2,
  Schema = 3,
  Structural = 4,
  Guard = 5,
  Numeric = 6,
  Generation = 7,
  Search = 8,
  Premise = 9,
  Domain = 10,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind);

// Desk-scale size limits. All of them are lifted by set_unsafe(true).
namespace limits {
inline constexpr int kOracleN = 26;
inline constexpr int kDenseN = 20;
inline constexpr int kEnumT = 22;
inline constexpr int kOrder = 8;
inline constexpr int kSMax = 6;
}  // namespace limits

void set_unsafe(bool on);
bool unsafe();
void require_guard(bool ok, const std::string& what);

inline bool bit(Config c, int v) { return (c >> v) & 1u; }

// Non-negative remainder.
inline long mod_nn(long a, long n) { return ((a % n) + n) % n; }

}  // namespace hz
