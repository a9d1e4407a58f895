#ifndef RCANON_VERSION_HPP
#define RCANON_VERSION_HPP

namespace rcanon {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kCacheFormatVersion = 1;

}  // namespace rcanon

#endif
