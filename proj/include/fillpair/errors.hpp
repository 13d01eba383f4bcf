#ifndef FILLPAIR_ERRORS_HPP
#define FILLPAIR_ERRORS_HPP

#include <stdexcept>

namespace fillpair {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed external input: documents, sign vectors, anything user-supplied.
struct parse_error : error {
  using error::error;
};

} // namespace fillpair

#endif
