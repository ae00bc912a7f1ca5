#include "tanglecospan/random.hpp"

#include <algorithm>

namespace tanglecospan {

Rng sample_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Layer make_layer(Gen g, std::size_t pos, int chirality = 1) {
  Layer l;
  l.gen = g;
  l.pos = pos;
  l.chirality = chirality;
  return l;
}

std::vector<Layer> crossings(std::size_t width) {
  std::vector<Layer> out;
  for (std::size_t i = 1; i < width; ++i) {
    out.push_back(make_layer(Gen::x, i));
    out.push_back(make_layer(Gen::y, i));
  }
  return out;
}

}  // namespace

SignSeq random_signs(Rng& rng, std::size_t n) {
  std::vector<int> s(n);
  for (auto& x : s) x = pick(rng, 0, 1) ? 1 : -1;
  return SignSeq(s);
}

SignSeq random_boundary(Rng& rng, Family f, std::size_t max_width) {
  while (true) {
    const std::size_t n = pick(rng, f == Family::nonzero_sum ? 1 : 0, max_width);
    SignSeq s = random_signs(rng, n);
    if (f == Family::zero_sum && s.sign_sum() != 0) {
      if (n % 2 == 1) continue;
      std::vector<int> half(n, 1);
      for (std::size_t k = n / 2; k < n; ++k) half[k] = -1;
      std::shuffle(half.begin(), half.end(), rng);
      s = SignSeq(half);
    }
    if (f == Family::nonzero_sum && s.sign_sum() == 0) continue;
    return s;
  }
}

TangleWord random_word(Rng& rng, const SignSeq& source, const WordOptions& opt) {
  TangleWord w;
  w.source = source;
  SignSeq level = source;
  const std::size_t length = pick(rng, 1, std::max<std::size_t>(opt.max_length, 1));
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<Layer> options = crossings(level.size());
    std::vector<Layer> shape;
    if (opt.cups_and_caps) {
      if (level.size() + 2 <= opt.max_width)
        for (std::size_t i = 1; i <= level.size() + 1; ++i)
          for (int c : {1, -1}) shape.push_back(make_layer(Gen::cup, i, c));
      for (std::size_t i = 1; i < level.size(); ++i)
        if (level.signs[i - 1] != level.signs[i]) shape.push_back(make_layer(Gen::cap, i));
    }
    // Crossings three times as often as cups and caps.
    const bool use_shape = !shape.empty() && (options.empty() || pick(rng, 0, 3) == 0);
    const auto& pool = use_shape ? shape : options;
    if (pool.empty()) break;
    const Layer l = pool[pick(rng, 0, pool.size() - 1)];
    level = apply_layer(level, l, k);
    w.layers.push_back(l);
  }
  return w;
}

TangleWord random_word(Rng& rng, Family f, const WordOptions& opt) {
  return random_word(rng, random_boundary(rng, f, opt.max_width), opt);
}

TangleWord random_braid_word(Rng& rng, std::size_t n, std::size_t length) {
  TangleWord w;
  w.source = random_signs(rng, n);
  const auto pool = crossings(n);
  for (std::size_t k = 0; k < length && !pool.empty(); ++k) w.layers.push_back(pool[pick(rng, 0, pool.size() - 1)]);
  return w;
}

TangleWord random_colored_braid(Rng& rng, std::size_t n, std::size_t length) {
  TangleWord w = random_braid_word(rng, n, length);
  std::vector<int> colors(n);
  for (auto& c : colors) c = static_cast<int>(pick(rng, 1, n));
  w.source = SignSeq(w.source.signs, colors);
  return w;
}

TangleWord random_string_link(Rng& rng, std::size_t n, std::size_t length) {
  WordOptions opt;
  opt.max_width = n + 2;
  opt.max_length = length;
  while (true) {
    const SignSeq s = random_signs(rng, n);
    TangleWord w = random_word(rng, s, opt);
    const Diagram d = make_diagram(w);
    const bool has_cup = std::any_of(w.layers.begin(), w.layers.end(), [](const Layer& l) { return l.gen == Gen::cup; });
    if (!has_cup || d.target.size() != n || d.components != n) continue;
    std::vector<int> seen(n, 0);
    bool ok = true;
    for (auto c : d.bottom_component) ok = ok && ++seen[c] == 1;
    for (auto c : d.top_component) ok = ok && ++seen[c] == 2;
    if (ok) return w;
  }
}

TangleWord flip(const TangleWord& w) {
  const Typing ty = typecheck(w);
  TangleWord out;
  out.source = ty.target;
  for (std::size_t k = w.layers.size(); k-- > 0;) {
    Layer l = w.layers[k];
    switch (l.gen) {
      case Gen::x: l.gen = Gen::y; break;
      case Gen::y: l.gen = Gen::x; break;
      case Gen::cup: l.gen = Gen::cap; break;
      case Gen::cap:
        l.gen = Gen::cup;
        l.chirality = ty.levels[k].signs[l.pos - 1];
        break;
      case Gen::id: break;
    }
    l.line = l.column = 0;
    out.layers.push_back(l);
  }
  return out;
}

}  // namespace tanglecospan
