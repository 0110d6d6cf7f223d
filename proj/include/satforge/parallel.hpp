#pragma once

namespace satforge {

// Execution policy for kernels that exist twice: a serial reference
// implementation and an OpenMP one. Serial mode is the ground truth the
// tests compare against and is fully deterministic, including returned
// certificates. Parallel mode returns the same verdicts/sets; certificates
// may be any valid one.
enum class Exec { serial, parallel };

int max_threads();
void set_max_threads(int n);

}  // namespace satforge
