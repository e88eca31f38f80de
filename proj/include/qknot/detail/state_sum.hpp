#pragma once

// Lane-indexed state sum over a LongKnotDiagram, shared by the Verma-module
// computation and the root-of-unity oracle. A state is the vector of basis
// indices on the current lanes; the amplitude type and the per-event weights
// come from the policy:
//
//   Amp   unit(), zero()
//   int   max_index()                         cups create indices 0..max_index()
//   void  crossing(i, j, sign, out)           out: vector<Out> with left, right, weight
//   W     cap(i, turn), cup(i, turn)
//   void  accumulate(Amp& target, const Amp& amp, const W& w)   target += amp * w
//   bool  is_zero(const Amp&)

#include <map>
#include <vector>

#include "qknot/errors.hpp"
#include "qknot/knots.hpp"

namespace qknot::detail {

template <class Policy>
typename Policy::Amp run_state_sum(const LongKnotDiagram& diagram, Policy& policy) {
  using Amp = typename Policy::Amp;
  using Key = std::vector<int>;
  std::map<Key, Amp> states;
  states.emplace(Key{0}, policy.unit());
  int counter = 0;

  std::vector<typename Policy::Out> outs;
  for (const auto& ev : diagram.events()) {
    std::map<Key, Amp> next;
    const int lane = ev.lane;
    auto add = [&](Key key, const Amp& amp, const auto& w) {
      auto [it, inserted] = next.try_emplace(std::move(key), policy.zero());
      policy.accumulate(it->second, amp, w);
    };
    switch (ev.kind) {
      case DiagramEvent::Kind::Crossing:
        counter += ev.sign;
        for (const auto& [key, amp] : states) {
          outs.clear();
          policy.crossing(key[lane], key[lane + 1], ev.sign, outs);
          for (const auto& o : outs) {
            Key k = key;
            k[lane] = o.left;
            k[lane + 1] = o.right;
            add(std::move(k), amp, o.weight);
          }
        }
        break;
      case DiagramEvent::Kind::Cap:
        for (const auto& [key, amp] : states) {
          if (key[lane] != key[lane + 1]) continue;
          Key k = key;
          k.erase(k.begin() + lane, k.begin() + lane + 2);
          add(std::move(k), amp, policy.cap(key[lane], ev.turn));
        }
        break;
      case DiagramEvent::Kind::Cup:
        for (const auto& [key, amp] : states) {
          for (int i = 0; i <= policy.max_index(); ++i) {
            Key k = key;
            k.insert(k.begin() + lane, {i, i});
            add(std::move(k), amp, policy.cup(i, ev.turn));
          }
        }
        break;
    }
    for (auto it = next.begin(); it != next.end();) {
      if (policy.is_zero(it->second)) {
        it = next.erase(it);
      } else {
        ++it;
      }
    }
    states = std::move(next);
  }
  if (counter != 0)
    throw Error(ErrorCode::NonzeroAlphaSquareCounter,
                "alpha^2/2 counter ends at " + std::to_string(counter) + "; diagram writhe is not 0");
  auto it = states.find(Key{0});
  return it == states.end() ? policy.zero() : it->second;
}

}  // namespace qknot::detail
