#include "muskat/grid.hpp"

#include <string>

#include "muskat/errors.hpp"

namespace muskat {

Grid Grid::make(double length, int n_modes) {
  if (!(length > 0.0)) {
    throw ConfigError("grid length must be positive, got " +
                      std::to_string(length));
  }
  if (n_modes < 8 || n_modes % 2 != 0) {
    throw ConfigError("grid n_modes must be even and >= 8, got " +
                      std::to_string(n_modes));
  }
  return Grid(length, n_modes);
}

Grid make_grid(double length, int n_modes) { return Grid::make(length, n_modes); }

}  // namespace muskat
