#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rrcode {

enum class CodecFault {
  bad_length,        // page length is not a whole number of frames
  corrupt_bridge,    // the two bridging bits after a codeword are not 11
  invalid_codeword,  // block contains a forbidden window or an unused index
};

const char* fault_name(CodecFault fault);

// Raised by stream decoders when the channel data is not a valid code
// sequence. No correction is attempted; `block()` is the zero-based frame
// in which the fault was detected.
class CodecError : public std::runtime_error {
 public:
  CodecError(CodecFault fault, std::size_t block, const std::string& detail)
      : std::runtime_error(std::string(fault_name(fault)) + " at block " +
                           std::to_string(block) + ": " + detail),
        fault_(fault),
        block_(block) {}

  CodecFault fault() const noexcept { return fault_; }
  std::size_t block() const noexcept { return block_; }

 private:
  CodecFault fault_;
  std::size_t block_;
};

// Malformed text/hex file content.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const char* fault_name(CodecFault fault) {
  switch (fault) {
    case CodecFault::bad_length: return "bad length";
    case CodecFault::corrupt_bridge: return "corrupt bridge";
    case CodecFault::invalid_codeword: return "invalid codeword";
  }
  return "unknown fault";
}

}  // namespace rrcode
