// Copyright 2026 The hallmhd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hallmhd/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <vector>

#include "hallmhd/errors.hpp"

namespace hallmhd {

static_assert(std::endian::native == std::endian::little, "snapshot I/O assumes a little-endian host");

namespace {

constexpr char kMagic[8] = {'H', 'M', 'H', 'D', 'S', 'N', 'A', 'P'};

template <class T>
void put(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void put_field(std::ostream& os, char tag, const SpectralField& f) {
  put(os, tag);
  for (int c = 0; c < 3; ++c) {
    const auto& v = f.component(c);
    os.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(cd)));
  }
}

class Reader {
 public:
  explicit Reader(std::vector<char> data, std::string path) : d_(std::move(data)), path_(std::move(path)) {}

  template <class T>
  T get() {
    T v;
    need(sizeof v);
    std::memcpy(&v, d_.data() + pos_, sizeof v);
    pos_ += sizeof v;
    return v;
  }

  void get_bytes(void* dst, std::size_t n) {
    need(n);
    std::memcpy(dst, d_.data() + pos_, n);
    pos_ += n;
  }

  bool at_end() const { return pos_ == d_.size(); }
  [[noreturn]] void fail(const std::string& what) const { throw IoError(path_ + ": " + what); }

 private:
  void need(std::size_t n) const {
    if (pos_ + n > d_.size()) fail("truncated snapshot");
  }
  std::vector<char> d_;
  std::string path_;
  std::size_t pos_ = 0;
};

}  // namespace

void write_snapshot(const std::string& path, const Snapshot& s) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  const Grid& g = s.B.grid();
  os.write(kMagic, sizeof kMagic);
  put(os, kSnapshotVersion);
  put(os, static_cast<std::uint8_t>(s.system));
  put(os, static_cast<std::int32_t>(g.n()));
  put(os, g.dealias_fraction());
  put(os, s.time);
  for (double v : {s.p.beta, s.p.eta, s.p.gamma, s.p.sobolev_s, s.p.band_K, s.p.band_R, s.p.band_delta})
    put(os, v);
  put(os, static_cast<std::uint8_t>(s.E ? 3 : 2));
  put_field(os, 'u', s.u);
  put_field(os, 'B', s.B);
  if (s.E) put_field(os, 'E', *s.E);
  if (!os) throw IoError("write failed for '" + path + "'");
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path + "'");
  Reader r(std::vector<char>(std::istreambuf_iterator<char>(is), {}), path);

  char magic[8];
  r.get_bytes(magic, sizeof magic);
  if (std::memcmp(magic, kMagic, sizeof magic) != 0) r.fail("not a snapshot file");
  if (const auto v = r.get<std::uint8_t>(); v != kSnapshotVersion)
    r.fail("unsupported snapshot version " + std::to_string(v));
  const auto sys = r.get<std::uint8_t>();
  if (sys > 1) r.fail("unknown system tag");
  const auto n = r.get<std::int32_t>();
  const auto dealias = r.get<double>();
  const auto time = r.get<double>();
  PhysParams p;
  for (double* v : {&p.beta, &p.eta, &p.gamma, &p.sobolev_s, &p.band_K, &p.band_R, &p.band_delta})
    *v = r.get<double>();

  GridPtr grid;
  try {
    grid = Grid::create(n, dealias);
  } catch (const Error& e) {
    r.fail(std::string("bad grid: ") + e.what());
  }

  const auto count = r.get<std::uint8_t>();
  std::optional<SpectralField> u, B, E;
  for (int f = 0; f < count; ++f) {
    const char tag = r.get<char>();
    SpectralField field(grid);
    for (int c = 0; c < 3; ++c)
      r.get_bytes(field.component(c).data(), field.component(c).size() * sizeof(cd));
    switch (tag) {
      case 'u': u = std::move(field); break;
      case 'B': B = std::move(field); break;
      case 'E': E = std::move(field); break;
      default: r.fail(std::string("unknown field tag '") + tag + "'");
    }
  }
  if (!u || !B) r.fail("snapshot lacks u or B");
  if (!r.at_end()) r.fail("trailing bytes after last field");
  return Snapshot(static_cast<SystemKind>(sys), time, p, std::move(*u), std::move(*B), std::move(E));
}

}  // namespace hallmhd
