#pragma once

namespace polycut {

inline constexpr double kDefaultEpsilon = 1e-9;

// Global geometric tolerance used by every predicate in the library.
double eps();
void set_eps(double value);

// Reads POLYCUT_EPSILON; returns false (and leaves the tolerance unchanged) if unset or unparsable.
bool load_eps_from_env();

// Restores the previous tolerance on scope exit.
class ScopedEpsilon {
public:
  explicit ScopedEpsilon(double value);
  ~ScopedEpsilon();
  ScopedEpsilon(const ScopedEpsilon&) = delete;
  ScopedEpsilon& operator=(const ScopedEpsilon&) = delete;

private:
  double saved_;
};

} // namespace polycut
