#pragma once

#include <string>

namespace rootspin {

using u128 = unsigned __int128;
using i128 = __int128;

// Decimal rendering; iostreams have no overload for __int128.
inline std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  return std::string(digits.rbegin(), digits.rend());
}

}  // namespace rootspin
