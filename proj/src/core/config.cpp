#include "core/config.hpp"

namespace gblx {

caps& global_caps() {
  static caps c;
  return c;
}

}  // namespace gblx
