#include "ratiocycle/comparison.hpp"

namespace ratiocycle {

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
  }
  return "?";
}

Counters& Counters::operator+=(const Counters& o) {
  comparisons += o.comparisons;
  comparison_rounds += o.comparison_rounds;
  oracle_calls += o.oracle_calls;
  work_units += o.work_units;
  parallel_steps += o.parallel_steps;
  return *this;
}

}  // namespace ratiocycle
