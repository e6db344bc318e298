#include "hyperzero/common.hpp"

#include <atomic>

namespace hz {

namespace {
std::atomic<bool> g_unsafe{false};
}

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Structural: return "structural";
    case ErrorKind::Guard: return "guard";
    case ErrorKind::Numeric: return "numeric";
    case ErrorKind::Generation: return "generation";
    case ErrorKind::Search: return "search";
    case ErrorKind::Premise: return "premise";
    case ErrorKind::Domain: return "domain";
  }
  return "error";
}

void set_unsafe(bool on) { g_unsafe.store(on); }
bool unsafe() { return g_unsafe.load(); }

void require_guard(bool ok, const std::string& what) {
  if (!ok && !unsafe()) throw Error(ErrorKind::Guard, "size guard exceeded: " + what);
}

}  // namespace hz
