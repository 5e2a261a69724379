#include "farey/config.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "farey/errors.hpp"

namespace farey {

namespace {

void read_cap(const char* name, std::size_t& slot) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  std::size_t value = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) {
    throw DomainError(std::string(name) + " must be a positive integer, got '" + raw + "'");
  }
  slot = value;
}

}  // namespace

Caps Caps::from_env() {
  Caps caps;
  read_cap("FAREY_LADDER_CAP", caps.ladder_vertices);
  read_cap("FAREY_GEO_CAP", caps.geodesics);
  return caps;
}

}  // namespace farey
