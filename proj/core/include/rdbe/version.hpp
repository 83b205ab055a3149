#ifndef RDBE_VERSION_HPP
#define RDBE_VERSION_HPP

namespace rdbe {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rdbe

#endif
