#ifndef BCPP_APP_HPP
#define BCPP_APP_HPP

#include "bcpp/core.hpp"
#include "bcpp/galo.hpp"
#include "bcpp/matching.hpp"
#include "bcpp/verify.hpp"

#include <string_view>

namespace bcpp {

enum class AppWinner { galo, matching };

inline std::string_view to_string(AppWinner w) {
  return w == AppWinner::galo ? "galo" : "matching";
}

struct AppResult {
  Packing packing;
  AppWinner winner = AppWinner::galo;
  Packing galo;
  Packing matching;
  std::size_t galo_length = 0;
  std::size_t matching_length = 0;
  std::size_t mu = 0;

  std::size_t length() const {
    return winner == AppWinner::galo ? galo_length : matching_length;
  }
};

/// Best of the greedy packing and the matching packing. Ties go to the
/// greedy. Refuses instances containing a chart with no bar above 1/2.
inline AppResult app_pack(const Instance& instance) {
  require_all_big(instance, "app");
  AppResult out;
  out.galo = galo_pack(instance);
  const auto matching = max_matching(build_graph(instance));
  out.mu = matching.mu();
  out.matching = matching_pack(instance, matching);
  out.galo_length = packing_length(instance, out.galo);
  out.matching_length = packing_length(instance, out.matching);
  if (out.matching_length < out.galo_length) {
    out.winner = AppWinner::matching;
    out.packing = out.matching;
  } else {
    out.winner = AppWinner::galo;
    out.packing = out.galo;
  }
  return out;
}

}  // namespace bcpp

#endif  // BCPP_APP_HPP
