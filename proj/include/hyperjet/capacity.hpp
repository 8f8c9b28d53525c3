#ifndef HYPERJET_CAPACITY_HPP
#define HYPERJET_CAPACITY_HPP

// Resource guards.  Enumerative routines refuse, loudly, to start
// computations whose state space exceeds a configurable cap; callers map
// CapacityError to a dedicated process exit code.

#include <stdexcept>
#include <string>

namespace hyperjet {

struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

inline void require_capacity(bool ok, const std::string& what)
{
    if (!ok) throw CapacityError(what);
}

}  // namespace hyperjet

#endif
