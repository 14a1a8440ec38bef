#include "cayley/ball_table.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>

#include "cayley/error.hpp"

namespace cayley {

namespace {

std::size_t hash_key(std::string_view key) { return std::hash<std::string_view>{}(key); }

constexpr char kMagic[8] = {'C', 'A', 'Y', 'B', 'A', 'L', 'L', '1'};

std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

IndexRange BallTable::level_range(int k) const {
  if (k < 0 || k > radius_) fail(ErrorKind::RadiusOutOfRange, "level " + std::to_string(k) + " outside B(" + std::to_string(radius_) + ")");
  return {level_start_[static_cast<std::size_t>(k)], level_start_[static_cast<std::size_t>(k) + 1]};
}

std::optional<std::size_t> BallTable::find(std::string_view key) const {
  if (slots_.empty()) return std::nullopt;
  std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash_key(key) & mask;; s = (s + 1) & mask) {
    std::uint32_t v = slots_[s];
    if (v == 0) return std::nullopt;
    if (this->key(v - 1) == key) return static_cast<std::size_t>(v - 1);
  }
}

std::optional<std::size_t> BallTable::find(const Element& g) const {
  thread_local std::string buf;
  buf.clear();
  model_->encode_to(g, buf);
  return find(buf);
}

void BallTable::neighbors(std::size_t i, std::vector<std::size_t>& out) const {
  thread_local std::vector<std::string> keys;
  model_->neighbor_keys(key(i), keys);
  out.resize(keys.size());
  for (std::size_t j = 0; j < keys.size(); ++j) {
    auto idx = find(keys[j]);
    out[j] = idx ? *idx : kAbsent;
  }
}

std::size_t BallTable::memory_bytes() const noexcept {
  return arena_.capacity() + offsets_.capacity() * sizeof(std::uint64_t) + levels_.capacity() +
         slots_.capacity() * sizeof(std::uint32_t);
}

std::size_t BallTable::append(std::string_view key, int level) {
  std::size_t index = levels_.size();
  if (index + 1 >= std::numeric_limits<std::uint32_t>::max())
    fail(ErrorKind::BudgetExceeded, "table index space exhausted");
  arena_.append(key);
  offsets_.push_back(arena_.size());
  levels_.push_back(static_cast<std::uint8_t>(level));
  if ((levels_.size() + 1) * 10 > slots_.size() * 7) rehash(std::max<std::size_t>(1024, slots_.size() * 2));
  else insert_slot(index);
  return index;
}

void BallTable::insert_slot(std::size_t index) {
  std::size_t mask = slots_.size() - 1;
  std::size_t s = hash_key(key(index)) & mask;
  while (slots_[s] != 0) s = (s + 1) & mask;
  slots_[s] = static_cast<std::uint32_t>(index + 1);
}

void BallTable::rehash(std::size_t capacity) {
  slots_.assign(capacity, 0);
  for (std::size_t i = 0; i < levels_.size(); ++i) insert_slot(i);
}

void BallTable::canonicalize() {
  std::vector<std::uint32_t> order(levels_.size());
  std::iota(order.begin(), order.end(), 0u);
  for (int k = 0; k <= radius_; ++k) {
    auto r = level_range(k);
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(r.begin),
              order.begin() + static_cast<std::ptrdiff_t>(r.end),
              [&](std::uint32_t x, std::uint32_t y) { return key(x) < key(y); });
  }
  std::string arena;
  arena.reserve(arena_.size());
  std::vector<std::uint64_t> offsets{0};
  offsets.reserve(offsets_.size());
  for (std::uint32_t i : order) {
    arena.append(key(i));
    offsets.push_back(arena.size());
  }
  arena_ = std::move(arena);
  offsets_ = std::move(offsets);
  rehash(slots_.size());
}

BallTable enumerate_ball(ModelPtr model, int N, std::size_t budget) {
  if (N < 0) fail(ErrorKind::InvalidParameter, "radius must be nonnegative");
  if (N > 250) fail(ErrorKind::InvalidParameter, "radius above 250 is not supported");
  if (budget == 0) fail(ErrorKind::InvalidParameter, "budget must be positive");
  BallTable t;
  t.model_ = std::move(model);
  t.radius_ = N;
  t.level_start_.push_back(0);
  t.append(t.model_->encode(t.model_->identity()), 0);
  t.level_start_.push_back(1);
  std::vector<std::string> keys;
  std::string current;
  for (int k = 0; k < N; ++k) {
    std::size_t begin = t.level_start_[static_cast<std::size_t>(k)];
    std::size_t end = t.level_start_[static_cast<std::size_t>(k) + 1];
    for (std::size_t i = begin; i < end; ++i) {
      current.assign(t.key(i));
      t.model_->neighbor_keys(current, keys);
      for (const auto& nk : keys) {
        if (t.find(nk)) continue;
        if (t.size() >= budget)
          throw BudgetExceeded(k, "B(" + std::to_string(k + 1) + ") exceeds the budget of " + std::to_string(budget) + " elements");
        t.append(nk, k + 1);
      }
    }
    t.level_start_.push_back(t.size());
  }
  t.canonicalize();
  return t;
}

std::optional<int> word_length(const Element& g, const BallTable& table) {
  auto i = table.find(g);
  if (!i) return std::nullopt;
  return table.level(*i);
}

std::vector<Element> sphere(const BallTable& table, int n) {
  auto r = table.level_range(n);
  std::vector<Element> out;
  out.reserve(r.size());
  for (std::size_t i = r.begin; i < r.end; ++i) out.push_back(table.element(i));
  return out;
}

LengthCheckReport cross_check_lengths(const BallTable& table) {
  LengthCheckReport report;
  if (!table.model().info().has_exact_length) {
    report.skipped = true;
    return report;
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    Element g = table.element(i);
    if (table.model().exact_length(g) != table.level(i))
      report.mismatches.push_back(table.model().format(g));
    ++report.checked;
  }
  return report;
}

void save_ball_cache(const BallTable& table, const std::string& path) {
  std::string data(kMagic, sizeof kMagic);
  put_varint(data, table.model().name().size());
  data += table.model().name();
  put_varint(data, static_cast<std::uint64_t>(table.radius()));
  put_varint(data, table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto k = table.key(i);
    put_varint(data, k.size());
    data += k;
    put_varint(data, static_cast<std::uint64_t>(table.level(i)));
  }
  std::uint64_t sum = fnv1a(data);
  for (int b = 0; b < 8; ++b) data.push_back(static_cast<char>((sum >> (8 * b)) & 0xff));
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::CacheError, "cannot write " + tmp);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) fail(ErrorKind::CacheError, "short write to " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

BallTable load_ball_cache(const std::string& path, ModelPtr model) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::CacheError, "cannot read " + path);
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (data.size() < sizeof kMagic + 8 || data.compare(0, sizeof kMagic, kMagic, sizeof kMagic) != 0)
    fail(ErrorKind::CacheError, path + " is not a ball cache");
  std::uint64_t stored = 0;
  for (int b = 0; b < 8; ++b)
    stored |= static_cast<std::uint64_t>(static_cast<unsigned char>(data[data.size() - 8 + static_cast<std::size_t>(b)])) << (8 * b);
  std::string_view body(data.data(), data.size() - 8);
  if (fnv1a(body) != stored) fail(ErrorKind::CacheError, path + " checksum mismatch");
  body.remove_prefix(sizeof kMagic);
  try {
    auto name_len = get_varint(body);
    if (name_len > body.size()) fail(ErrorKind::CacheError, "truncated header");
    if (body.substr(0, name_len) != model->name())
      fail(ErrorKind::CacheError, path + " belongs to model '" + std::string(body.substr(0, name_len)) + "'");
    body.remove_prefix(name_len);
    BallTable t;
    t.model_ = std::move(model);
    t.radius_ = static_cast<int>(get_varint(body));
    auto count = get_varint(body);
    t.levels_.reserve(count);
    t.offsets_.reserve(count + 1);
    t.level_start_.push_back(0);
    for (std::uint64_t i = 0; i < count; ++i) {
      auto len = get_varint(body);
      if (len > body.size()) fail(ErrorKind::CacheError, "truncated record");
      std::string_view k = body.substr(0, len);
      body.remove_prefix(len);
      int level = static_cast<int>(get_varint(body));
      if (level < 0 || level > t.radius_ || (i > 0 && level < t.levels_.back()))
        fail(ErrorKind::CacheError, "records out of order");
      while (static_cast<int>(t.level_start_.size()) <= level) t.level_start_.push_back(i);
      t.arena_.append(k);
      t.offsets_.push_back(t.arena_.size());
      t.levels_.push_back(static_cast<std::uint8_t>(level));
    }
    while (static_cast<int>(t.level_start_.size()) <= t.radius_ + 1) t.level_start_.push_back(count);
    std::size_t cap = 1024;
    while (cap * 7 < (count + 1) * 10) cap *= 2;
    t.rehash(cap);
    return t;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CacheError) throw;
    fail(ErrorKind::CacheError, path + ": " + e.what());
  }
}

std::string ball_cache_name(const GroupModel& model, int N) {
  std::string safe;
  for (char c : model.name()) safe.push_back(std::isalnum(static_cast<unsigned char>(c)) || c == '-' ? c : '_');
  return safe + "__N" + std::to_string(N) + ".ball";
}

BallTable cached_ball(ModelPtr model, int N, std::size_t budget, const std::string& cache_dir) {
  if (cache_dir.empty()) return enumerate_ball(std::move(model), N, budget);
  std::filesystem::path path = std::filesystem::path(cache_dir) / ball_cache_name(*model, N);
  if (std::filesystem::exists(path)) {
    try {
      return load_ball_cache(path.string(), model);
    } catch (const Error&) {
      // A stale or damaged cache file is rebuilt below.
    }
  }
  BallTable t = enumerate_ball(model, N, budget);
  std::filesystem::create_directories(cache_dir);
  save_ball_cache(t, path.string());
  return t;
}

}  // namespace cayley
