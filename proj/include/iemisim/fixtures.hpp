#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace iemisim {

namespace detail {
struct EmbeddedFixture {
    const char* stem;
    const char* text;
};
extern const EmbeddedFixture kEmbeddedFixtures[];
extern const std::size_t kEmbeddedFixtureCount;
} // namespace detail

struct FixtureInfo {
    std::string name;        ///< scenario name, e.g. "CV-1"
    std::string file_stem;   ///< data file stem under fixtures/
    std::string description;
};

std::vector<FixtureInfo> list_fixtures();

/// Raw JSON text of a fixture, looked up by scenario name or file stem
/// (case-insensitive). Throws ConfigError for unknown names.
std::string fixture_text(const std::string& name);

} // namespace iemisim
