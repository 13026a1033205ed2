#ifndef POSCERT_ERRORS_HPP
#define POSCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace poscert {

/// Requested computation exceeds the supported exact-arithmetic ranges
/// (variable count, Macaulay matrix size, ...).
class capacity_error : public std::runtime_error {
  public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// The Macaulay denominator minor vanished at this specialization while the
/// resultant ratio is still defined generically. Callers retry at shifted
/// evaluation points.
class degenerate_specialization_error : public std::runtime_error {
  public:
    explicit degenerate_specialization_error(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace poscert

#endif
