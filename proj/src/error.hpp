#pragma once

#include <stdexcept>
#include <string>

namespace sierpdist {

enum class Errc {
  parse,          // malformed input text
  validation,     // structurally invalid input (self-loop, bad id, arity, ...)
  applicability,  // requested method does not apply to this base graph
  budget,         // resource guard exceeded (vertex budget, search cap)
  unreachable,    // vertex pair in different components
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sierpdist
