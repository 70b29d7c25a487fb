#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace spider {

// Signal amplitudes are exact integers of unbounded size; geometric
// amplification and prime-product path encodings overflow any fixed width.
using BigInt = boost::multiprecision::cpp_int;

using SignalId = std::uint64_t;
using RelayId = std::uint32_t;
using ArrayId = std::uint32_t;
using Step = std::uint64_t;

}  // namespace spider
