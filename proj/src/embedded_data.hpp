#pragma once

// Text of the files under data/, compiled into the library.
namespace cyc::data {

extern const char* const kG25Chern;
extern const char* const kExpected;

}  // namespace cyc::data
