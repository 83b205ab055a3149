#ifndef RDBE_HASH_HPP
#define RDBE_HASH_HPP

#include <string>
#include <string_view>

namespace rdbe {

// Lowercase hex SHA-256 digest of the given bytes.
std::string sha256_hex(std::string_view data);

}  // namespace rdbe

#endif
