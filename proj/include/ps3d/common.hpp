#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ps3d {

// ---------------------------------------------------------------------------
// Errors. Exit codes: 0 success, 2 config error, 3 numeric failure, 4 I/O.
// ---------------------------------------------------------------------------

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitIo = 4;

// ---------------------------------------------------------------------------
// Small vector types. Double precision everywhere; images stay float32.
// ---------------------------------------------------------------------------

struct Vec3 {
  double x = 0, y = 0, z = 0;

  double& operator[](int i) { return (&x)[i]; }
  double operator[](int i) const { return (&x)[i]; }

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline double norm2(const Vec3& v) { return dot(v, v); }
inline Vec3 normalized(const Vec3& v) { return v / norm(v); }

struct Rgb {
  double r = 0, g = 0, b = 0;

  double& operator[](int i) { return (&r)[i]; }
  double operator[](int i) const { return (&r)[i]; }

  Rgb operator+(const Rgb& o) const { return {r + o.r, g + o.g, b + o.b}; }
  Rgb operator-(const Rgb& o) const { return {r - o.r, g - o.g, b - o.b}; }
  Rgb operator*(double s) const { return {r * s, g * s, b * s}; }
  Rgb& operator+=(const Rgb& o) {
    r += o.r;
    g += o.g;
    b += o.b;
    return *this;
  }
};

inline double mean(const Rgb& c) { return (c.r + c.g + c.b) / 3.0; }
inline double max_abs(const Rgb& c) {
  return std::max(std::abs(c.r), std::max(std::abs(c.g), std::abs(c.b)));
}

struct Mat3 {
  // row-major
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  double operator()(int r, int c) const { return m[3 * r + c]; }
  double& operator()(int r, int c) { return m[3 * r + c]; }

  Vec3 operator*(const Vec3& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }
  Mat3 transposed() const {
    Mat3 t;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) t(r, c) = (*this)(c, r);
    return t;
  }
};

// ---------------------------------------------------------------------------
// Counter-based RNG. Every random draw in the engine derives from hashing a
// seed with a few stream tags, so results never depend on thread scheduling
// and resuming a run replays the exact same streams.
// ---------------------------------------------------------------------------

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t hash_combine(uint64_t a, uint64_t b) { return splitmix64(a ^ splitmix64(b)); }

template <typename... Rest>
inline uint64_t hash_combine(uint64_t a, uint64_t b, Rest... rest) {
  return hash_combine(hash_combine(a, b), static_cast<uint64_t>(rest)...);
}

// Stream tags for the independent random streams of a run.
enum : uint64_t {
  kStreamInit = 0x11,
  kStreamJitter = 0x22,
  kStreamBatch = 0x33,
  kStreamEikonal = 0x44,
  kStreamNoise = 0x55,
  kStreamLights = 0x66,
};

class HashRng {
 public:
  explicit HashRng(uint64_t seed) : state_(splitmix64(seed ^ 0x6a09e667f3bcc908ull)) {}
  template <typename... Tags>
  HashRng(uint64_t seed, Tags... tags) : HashRng(hash_combine(seed, static_cast<uint64_t>(tags)...)) {}

  uint64_t next_u64() {
    state_ = splitmix64(state_);
    return state_;
  }
  // uniform in [0,1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }
  uint64_t next_below(uint64_t n) { return next_u64() % n; }

  // standard normal via Box-Muller (two uniforms per draw, no cached state)
  double normal() {
    double u1 = next_double(), u2 = next_double();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }
  Vec3 in_unit_sphere() {
    for (;;) {
      Vec3 p{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
      if (norm2(p) <= 1.0) return p;
    }
  }

 private:
  uint64_t state_;
};

// ---------------------------------------------------------------------------
// FNV-1a 64-bit, used for file checksums and spec hashes.
// ---------------------------------------------------------------------------

inline uint64_t fnv1a64(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

inline std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

// ---------------------------------------------------------------------------
// Logging. PS3D_LOG=quiet|info|debug (default info).
// ---------------------------------------------------------------------------

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

inline LogLevel log_level() {
  static LogLevel lvl = [] {
    const char* e = std::getenv("PS3D_LOG");
    if (!e) return LogLevel::Info;
    std::string s(e);
    if (s == "quiet") return LogLevel::Quiet;
    if (s == "debug") return LogLevel::Debug;
    return LogLevel::Info;
  }();
  return lvl;
}

template <typename... Args>
void log_info(const char* fmt, Args... args) {
  if (log_level() >= LogLevel::Info) {
    std::fprintf(stderr, "[ps3d] ");
    std::fprintf(stderr, fmt, args...);
    std::fprintf(stderr, "\n");
  }
}

template <typename... Args>
void log_debug(const char* fmt, Args... args) {
  if (log_level() >= LogLevel::Debug) {
    std::fprintf(stderr, "[ps3d:debug] ");
    std::fprintf(stderr, fmt, args...);
    std::fprintf(stderr, "\n");
  }
}

// Execution policy for batch kernels. Serial is the reference path kept for
// testing; the OpenMP paths must reproduce it (bit-exact in Deterministic).
enum class Exec {
  Serial,            // single thread, fixed order
  Deterministic,     // OpenMP over fixed blocks, reduction in block order
  Parallel,          // OpenMP with per-thread accumulators
};

}  // namespace ps3d
