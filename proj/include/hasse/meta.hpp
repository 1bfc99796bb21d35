#pragma once

#include <cstddef>
#include <tuple>
#include <utility>

namespace hasse::meta {

/// Compile-time list of types, one per simplex level.
template <class... Ts>
struct TypeList {
    static constexpr std::size_t size = sizeof...(Ts);
};

namespace detail {
template <class List> struct AsTuple;
template <class... Ts> struct AsTuple<TypeList<Ts...>> { using type = std::tuple<Ts...>; };
} // namespace detail

template <class List, std::size_t I>
using TypeAt = std::tuple_element_t<I, typename detail::AsTuple<List>::type>;

/// Calls f(integral_constant<int, L>) for L = First..Last inclusive.
template <int First, int Last, class F>
constexpr void static_for(F&& f) {
    if constexpr (Last >= First) {
        [&]<int... Is>(std::integer_sequence<int, Is...>) {
            (f(std::integral_constant<int, First + Is>{}), ...);
        }(std::make_integer_sequence<int, Last - First + 1>{});
    }
}

/// Same but iterating Last..First (descending).
template <int First, int Last, class F>
constexpr void static_for_reverse(F&& f) {
    if constexpr (Last >= First) {
        [&]<int... Is>(std::integer_sequence<int, Is...>) {
            (f(std::integral_constant<int, Last - Is>{}), ...);
        }(std::make_integer_sequence<int, Last - First + 1>{});
    }
}

/// Runtime-to-compile-time level dispatch: calls f(integral_constant<int, L>)
/// for the L in [First, Last] equal to level. Returns false when out of range.
template <int First, int Last, class F>
bool dispatch_level(int level, F&& f) {
    bool hit = false;
    static_for<First, Last>([&](auto lc) {
        if (lc() == level) {
            f(lc);
            hit = true;
        }
    });
    return hit;
}

/// std::tuple<T<0>, T<1>, ..., T<Count-1>> for a level-indexed template.
namespace detail {
template <template <int> class T, int Count>
struct LevelTupleImpl {
    template <int... Is>
    static std::tuple<T<Is>...> make(std::integer_sequence<int, Is...>);
    using type = decltype(make(std::make_integer_sequence<int, Count>{}));
};
} // namespace detail

template <template <int> class T, int Count>
using LevelTuple = typename detail::LevelTupleImpl<T, Count>::type;

} // namespace hasse::meta
