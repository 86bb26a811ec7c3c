#pragma once

namespace gblx {

// Process-wide resource caps.  Sweeps that would exceed a cap refuse to
// run (errc::cap) instead of silently truncating.
struct caps {
  int max_vars = 3;               // distinct variables per evaluation sweep
  long max_assignments = 100000;  // |A|^#vars per sweep
  int max_poset = 4;              // poset elements per labeled product
  long max_product = 4096;        // elements per product carrier
  int lddt_product_len = 4;       // factors per witness product
  int lddt_block_len = 3;         // letters per modal block
};

caps& global_caps();

}  // namespace gblx
