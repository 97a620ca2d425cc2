#include "fluctua/special.hpp"

#include <array>
#include <string>

namespace fluctua {

std::string to_hex(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::array<char, 16> buf;
  for (int i = 15; i >= 0; --i) {
    buf[i] = digits[v & 0xf];
    v >>= 4;
  }
  return std::string(buf.data(), buf.size());
}

}  // namespace fluctua
