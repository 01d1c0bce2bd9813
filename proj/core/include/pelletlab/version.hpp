#pragma once

#define PELLETLAB_VERSION "0.1.0"

namespace pelletlab {

inline constexpr const char* kVersion = PELLETLAB_VERSION;

/// Version of every structured document this library reads or writes
/// (sweep reports, prime-table and ideal documents, gadget reports).
inline constexpr int kSchemaVersion = 1;

}  // namespace pelletlab
