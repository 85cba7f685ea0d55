#include "nmaw/accel/calibration.hpp"

#include <cstdlib>
#include <sstream>
#include <vector>

#include "nmaw/error.hpp"
#include "nmaw/stencil/hdiff.hpp"
#include "nmaw/stencil/vadvc.hpp"

namespace nmaw::accel {

const KernelProfile& Calibration::kernel(KernelKind kind) const {
  const auto it = kernels.find(kind);
  if (it == kernels.end()) {
    throw Error(ErrorKind::InvalidArgument,
                "no calibration for kernel " + std::string(to_string(kind)));
  }
  return it->second;
}

const PlatformConfig& Calibration::platform(std::string_view name) const {
  const auto it = platforms.find(std::string(name));
  if (it == platforms.end()) {
    throw Error(ErrorKind::UnknownPlatform, "unknown platform '" + std::string(name) + "'");
  }
  return it->second;
}

double stencil_flops_per_unit(KernelKind kernel, std::size_t rows, std::size_t cols,
                              std::size_t depth) {
  const double columns = static_cast<double>(rows) * static_cast<double>(cols);
  switch (kernel) {
    case KernelKind::Hdiff:
      return columns * static_cast<double>(depth) *
             static_cast<double>(stencil::kHdiffFlopsPerPoint);
    case KernelKind::Vadvc:
      return columns * static_cast<double>(stencil::vadvc_column_counters(depth).flops);
    case KernelKind::SneakySnake:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, "unit_grid applies to stencil kernels only");
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.emplace_back(io::trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

[[noreturn]] void unknown_key(const std::string& key, const io::KeyValueEntry& entry) {
  throw Error(ErrorKind::MalformedLine, "unknown key '" + key + "'", entry.line);
}

int as_count(const io::KeyValueEntry& entry, const std::string& key) {
  const long long v = io::as_integer(entry, key);
  if (v < 1 || v > 1'000'000) {
    throw Error(ErrorKind::MalformedLine, key + " must be a positive count", entry.line);
  }
  return static_cast<int>(v);
}

struct KernelDraft {
  KernelProfile profile;
  bool has_units = false, has_in = false, has_out = false, has_channel = false,
       has_cycles = false, has_divisible = false, has_flops = false;
};

void apply_kernel_key(KernelDraft& draft, const std::string& field, const std::string& key,
                      const io::KeyValueEntry& entry) {
  auto& p = draft.profile;
  if (field == "work_units") {
    const long long v = io::as_integer(entry, key);
    if (v < 0) throw Error(ErrorKind::MalformedLine, key + " must be >= 0", entry.line);
    p.work_units = static_cast<std::uint64_t>(v);
    draft.has_units = true;
  } else if (field == "bytes_in_per_unit") {
    p.bytes_in_per_unit = io::as_double(entry, key);
    draft.has_in = true;
  } else if (field == "bytes_out_per_unit") {
    p.bytes_out_per_unit = io::as_double(entry, key);
    draft.has_out = true;
  } else if (field == "channel_bytes_per_unit") {
    p.channel_bytes_per_unit = io::as_double(entry, key);
    draft.has_channel = true;
  } else if (field == "compute_cycles_per_unit") {
    p.compute_cycles_per_unit = io::as_double(entry, key);
    draft.has_cycles = true;
  } else if (field == "divisible") {
    p.divisible = io::as_bool(entry, key);
    draft.has_divisible = true;
  } else if (field == "flops_per_unit") {
    if (draft.has_flops) throw Error(ErrorKind::MalformedLine, key + " set twice", entry.line);
    p.flops_per_unit = io::as_double(entry, key);
    draft.has_flops = true;
  } else if (field == "unit_grid") {
    if (draft.has_flops) throw Error(ErrorKind::MalformedLine, key + " set twice", entry.line);
    const auto parts = split(entry.value, ',');
    if (parts.size() != 3) {
      throw Error(ErrorKind::MalformedLine, key + " expects I,J,K", entry.line);
    }
    std::size_t extent[3];
    for (int d = 0; d < 3; ++d) {
      extent[d] = static_cast<std::size_t>(as_count(io::KeyValueEntry{parts[d], entry.line}, key));
    }
    try {
      p.flops_per_unit = stencil_flops_per_unit(p.kernel, extent[0], extent[1], extent[2]);
    } catch (const Error& e) {
      throw Error(ErrorKind::MalformedLine, key + ": " + e.what(), entry.line);
    }
    draft.has_flops = true;
  } else {
    unknown_key(key, entry);
  }
}

void apply_platform_key(PlatformConfig& pc, const std::string& field, const std::string& key,
                        const io::KeyValueEntry& entry) {
  if (field == "clock_mhz") {
    pc.clock_mhz = io::as_double(entry, key);
  } else if (field == "channels_per_pe") {
    pc.channels_per_pe = as_count(entry, key);
  } else if (field == "host.read_gbps") {
    pc.host_link.read_gbps = io::as_double(entry, key);
  } else if (field == "host.write_gbps") {
    pc.host_link.write_gbps = io::as_double(entry, key);
  } else if (field == "memory.channel_gbps") {
    pc.memory.channel_gbps = io::as_double(entry, key);
  } else if (field == "memory.usable_channels") {
    pc.memory.usable_channels = as_count(entry, key);
  } else if (field == "power.static_w") {
    pc.power.static_w = io::as_double(entry, key);
  } else if (field == "power.per_channel_w") {
    pc.power.per_channel_w = io::as_double(entry, key);
  } else if (field == "power.per_pe_w") {
    pc.power.per_pe_w = io::as_double(entry, key);
  } else if (field.rfind("cap.", 0) == 0) {
    KernelKind kernel{};
    try {
      kernel = parse_kernel(field.substr(4));
    } catch (const Error&) {
      unknown_key(key, entry);
    }
    pc.pe_cap[kernel] = as_count(entry, key);
  } else {
    unknown_key(key, entry);
  }
}

}  // namespace

Calibration calibration_from_keys(const io::KeyValueMap& keys) {
  Calibration cal;
  cal.platforms = platform_presets();
  std::map<KernelKind, KernelDraft> drafts;

  for (const auto& [key, entry] : keys) {
    if (key.rfind("kernel.", 0) == 0) {
      const auto rest = key.substr(7);
      const auto dot = rest.find('.');
      if (dot == std::string::npos) unknown_key(key, entry);
      KernelKind kind{};
      try {
        kind = parse_kernel(rest.substr(0, dot));
      } catch (const Error&) {
        unknown_key(key, entry);
      }
      auto& draft = drafts[kind];
      draft.profile.kernel = kind;
      apply_kernel_key(draft, rest.substr(dot + 1), key, entry);
    } else if (key.rfind("platform.", 0) == 0) {
      const auto rest = key.substr(9);
      // Platform names contain '+' and '_' but no '.'.
      const auto dot = rest.find('.');
      if (dot == std::string::npos) unknown_key(key, entry);
      const auto name = rest.substr(0, dot);
      const auto it = cal.platforms.find(name);
      if (it == cal.platforms.end()) {
        throw Error(ErrorKind::UnknownPlatform, "unknown platform '" + name + "'", entry.line);
      }
      apply_platform_key(it->second, rest.substr(dot + 1), key, entry);
    } else {
      unknown_key(key, entry);
    }
  }

  for (auto& [kind, draft] : drafts) {
    const std::string prefix = "kernel." + std::string(to_string(kind)) + ".";
    const auto require = [&](bool present, const char* field) {
      if (!present) {
        throw Error(ErrorKind::InvalidArgument, "missing calibration key " + prefix + field);
      }
    };
    require(draft.has_units, "work_units");
    require(draft.has_in, "bytes_in_per_unit");
    require(draft.has_out, "bytes_out_per_unit");
    require(draft.has_channel, "channel_bytes_per_unit");
    require(draft.has_cycles, "compute_cycles_per_unit");
    require(draft.has_divisible, "divisible");
    if (kind != KernelKind::SneakySnake) require(draft.has_flops, "unit_grid");
    draft.profile.validate();
    cal.kernels[kind] = draft.profile;
  }
  for (const auto& [name, pc] : cal.platforms) pc.validate();
  return cal;
}

Calibration load_calibration(const std::filesystem::path& path) {
  return calibration_from_keys(io::read_key_value_file(path));
}

std::filesystem::path default_calibration_path() {
  if (const char* env = std::getenv("NMAW_CALIBRATION"); env != nullptr && *env != '\0') {
    return env;
  }
  const std::filesystem::path source = NMAW_SOURCE_CALIBRATION;
  std::error_code ec;
  if (std::filesystem::exists(source, ec)) return source;
  return NMAW_INSTALLED_CALIBRATION;
}

}  // namespace nmaw::accel
