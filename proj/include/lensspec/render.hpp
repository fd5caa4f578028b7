#pragma once

#include <string>
#include <vector>

#include "lensspec/genfun.hpp"
#include "lensspec/isospec.hpp"
#include "lensspec/selfcheck.hpp"
#include "lensspec/spectrum.hpp"

namespace lensspec {

enum class Format { table, json, csv };

Format parse_format(const std::string& name);

std::string render_spectrum(const std::string& space, const SpectrumTable& table, Format format);

struct NamedFunction {
    std::string name;
    RationalSeries value;
    std::vector<BigInt> series;
};

std::string render_genfun(const std::string& space, int n, int q, const std::vector<NamedFunction>& functions,
                          Format format);

struct Verdict {
    int p = 0;
    bool isospectral = false;
    std::string certificate;
};

std::string render_isospectral(const std::string& space1, const std::string& space2, int n, const std::string& method,
                               const std::vector<Verdict>& verdicts, Format format);

struct SearchReport {
    int q = 0;
    int n = 0;
    int p0 = 0;
    std::string mode;
    std::size_t classes = 0;
    std::vector<IsospectralFamily> families;
    std::vector<bool> direct_verified;
};

std::string render_search(const SearchReport& report, Format format);

std::string render_checks(const std::vector<CheckResult>& checks, Format format);

}  // namespace lensspec
