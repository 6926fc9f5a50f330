#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace pospace {

  // Applies fn to every item using up to `workers` threads. Results come back
  // in input order regardless of completion order; the first exception (in
  // input order) is rethrown after all workers finish.
  template <class In, class Fn>
  auto parallel_map(std::vector<In> const& items, Fn fn, unsigned workers)
      -> std::vector<decltype(fn(items.front()))> {
    using Out = decltype(fn(items.front()));
    std::vector<std::optional<Out>>  slots(items.size());
    std::vector<std::exception_ptr>  errors(items.size());
    std::atomic<std::size_t>         next{0};

    auto work = [&] {
      for (auto i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1)) {
        try {
          slots[i].emplace(fn(items[i]));
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };

    workers = std::max(1U, workers);
    if (workers == 1 || items.size() < 2) {
      work();
    } else {
      std::vector<std::jthread> pool;
      auto count = std::min<std::size_t>(workers, items.size());
      for (std::size_t t = 0; t < count; ++t) pool.emplace_back(work);
    }

    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    std::vector<Out> out;
    out.reserve(items.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
  }

}  // namespace pospace
