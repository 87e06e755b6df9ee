#include "galab/engine.hpp"

#include <stdexcept>

namespace galab {

void GAConfig::validate() const {
  if (population_size < 2) throw std::invalid_argument("engine.population must be >= 2");
  if (!(survivor_fraction > 0.0 && survivor_fraction <= 1.0))
    throw std::invalid_argument("engine.survivor_fraction must be in (0,1]");
  operators.validate();
  const bool flat = std::holds_alternative<FlatTemplate>(genome);
  const bool flat_kind = operators.crossover == CrossoverKind::OnePointFlat ||
                         operators.crossover == CrossoverKind::UniformFlat;
  if (flat && !flat_kind)
    throw std::invalid_argument("operators.crossover: stream kinds need a segmented genome");
  if (!flat && flat_kind)
    throw std::invalid_argument("operators.crossover: flat kinds need a flat genome");
  if (flat) {
    if (std::get<FlatTemplate>(genome).length < 1)
      throw std::invalid_argument("genome.length must be >= 1");
  } else {
    const auto& tmpl = std::get<SegmentedTemplate>(genome);
    if (tmpl.id_width < 1 || tmpl.id_width > 20)
      throw std::invalid_argument("genome.id_width must be in [1,20]");
  }
}

}  // namespace galab
