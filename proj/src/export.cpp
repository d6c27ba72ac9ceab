#include <wsrp/export.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wsrp {

namespace fs = std::filesystem;

std::string formatDouble(double x)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string formatKm(Metres m)
{
    const char* sign = m < 0 ? "-" : "";
    const long long a = std::llabs(m);
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%lld.%03lld", sign, a / 1000, a % 1000);
    return buf;
}

namespace {

    constexpr std::string_view kArchiveHeader = "binEmissions,binStaffCost,binTravelCost,binCarUse,emissions,staffCost,"
                                                "travelCost,carUseFraction,fitnessKm,tour,modes";

    void writeFile(const fs::path& path, const std::string& content)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open '" + path.string() + "' for writing");
        out << content;
        if (!out)
            throw std::runtime_error("failed writing '" + path.string() + "'");
    }

    std::string readFile(const fs::path& path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw std::runtime_error("cannot open '" + path.string() + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    template <typename T>
    T parseNumber(std::string_view s, std::size_t line, std::string_view column)
    {
        T value{};
        const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size())
            throw ValidationError("archive csv line " + std::to_string(line) + ": bad " + std::string(column) + " '" +
                                  std::string(s) + "'");
        return value;
    }

    Metres parseKm(std::string_view s, std::size_t line)
    {
        const auto km = parseNumber<double>(s, line, "fitnessKm");
        return static_cast<Metres>(std::llround(km * 1000.0));
    }

} // namespace

std::string archiveCsv(std::span<const CellEntry> cells)
{
    std::vector<const CellEntry*> sorted;
    sorted.reserve(cells.size());
    for (const CellEntry& c : cells)
        sorted.push_back(&c);
    std::sort(sorted.begin(), sorted.end(), [](const CellEntry* a, const CellEntry* b) { return a->key < b->key; });

    std::string out(kArchiveHeader);
    out += '\n';
    for (const CellEntry* c : sorted) {
        for (auto b : c->key)
            out += std::to_string(b) + ',';
        for (double x : featureVector(c->characteristics))
            out += formatDouble(x) + ',';
        out += formatKm(c->fitness) + ',' + encodeTour(c->genotype) + ',' + encodeModes(c->genotype) + '\n';
    }
    return out;
}

std::vector<CellEntry> parseArchiveCsv(std::string_view text)
{
    std::vector<CellEntry> cells;
    std::size_t lineNo = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++lineNo;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (lineNo == 1) {
            if (line != kArchiveHeader)
                throw ValidationError("archive csv: unexpected header");
            continue;
        }
        if (line.empty())
            continue;

        std::vector<std::string_view> fields;
        std::size_t f = 0;
        while (true) {
            const std::size_t comma = line.find(',', f);
            fields.push_back(line.substr(f, comma == std::string_view::npos ? std::string_view::npos : comma - f));
            if (comma == std::string_view::npos)
                break;
            f = comma + 1;
        }
        if (fields.size() != 11)
            throw ValidationError("archive csv line " + std::to_string(lineNo) + ": expected 11 columns");

        CellEntry c;
        for (std::size_t d = 0; d < kFeatureDims; ++d)
            c.key[d] = parseNumber<std::uint16_t>(fields[d], lineNo, "bin index");
        c.characteristics.emissions = parseNumber<double>(fields[4], lineNo, "emissions");
        c.characteristics.staffCost = parseNumber<double>(fields[5], lineNo, "staffCost");
        c.characteristics.travelCost = parseNumber<double>(fields[6], lineNo, "travelCost");
        c.characteristics.carUseFraction = parseNumber<double>(fields[7], lineNo, "carUseFraction");
        c.fitness = parseKm(fields[8], lineNo);
        c.genotype = decodeGenotypeText(fields[9], fields[10]);
        cells.push_back(std::move(c));
    }
    if (lineNo == 0)
        throw ValidationError("archive csv: empty file");
    return cells;
}

void exportArchive(const Archive& archive, const fs::path& path)
{
    const auto cells = cellTable(archive);
    exportArchive(cells, path);
}

void exportArchive(std::span<const CellEntry> cells, const fs::path& path) { writeFile(path, archiveCsv(cells)); }

std::vector<CellEntry> importArchive(const fs::path& path)
{
    try {
        return parseArchiveCsv(readFile(path));
    }
    catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

std::size_t SliceGrid::filled() const
{
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.has_value(); }));
}

SliceGrid slice(std::span<const CellEntry> cells, int binsPerDim, const ArchiveBounds& bounds, std::size_t dimX,
                std::size_t dimY)
{
    if (dimX >= kFeatureDims || dimY >= kFeatureDims || dimX == dimY)
        throw std::invalid_argument("slice: dimensions must be two distinct characteristics");
    SliceGrid g;
    g.dimX = dimX;
    g.dimY = dimY;
    g.bins = binsPerDim;
    g.lowX = bounds.lower[dimX];
    g.highX = bounds.upper[dimX];
    g.lowY = bounds.lower[dimY];
    g.highY = bounds.upper[dimY];
    g.cells.assign(static_cast<std::size_t>(binsPerDim) * static_cast<std::size_t>(binsPerDim), std::nullopt);
    for (const CellEntry& c : cells) {
        auto& slot = g.cells[static_cast<std::size_t>(c.key[dimY]) * static_cast<std::size_t>(binsPerDim) + c.key[dimX]];
        if (!slot || c.fitness < *slot)
            slot = c.fitness;
    }
    return g;
}

SliceGrid slice(std::span<const CellEntry> cells, int binsPerDim, const ArchiveBounds& bounds, std::string_view dimX,
                std::string_view dimY)
{
    const auto x = featureIndex(dimX);
    const auto y = featureIndex(dimY);
    if (!x)
        throw std::invalid_argument("slice: unknown characteristic '" + std::string(dimX) + "'");
    if (!y)
        throw std::invalid_argument("slice: unknown characteristic '" + std::string(dimY) + "'");
    return slice(cells, binsPerDim, bounds, *x, *y);
}

std::string sliceCsv(const SliceGrid& grid)
{
    std::string out = "binX,binY,fitnessKm\n";
    for (int y = 0; y < grid.bins; ++y)
        for (int x = 0; x < grid.bins; ++x)
            if (const auto& f = grid.at(x, y))
                out += std::to_string(x) + ',' + std::to_string(y) + ',' + formatKm(*f) + '\n';
    return out;
}

std::string rampColour(Metres fitness, Metres lo, Metres hi)
{
    const double t = hi > lo ? static_cast<double>(fitness - lo) / static_cast<double>(hi - lo) : 0.0;
    const long red = std::lround(255.0 * std::clamp(t, 0.0, 1.0));
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02lx%02lx00", red, 255 - red);
    return buf;
}

namespace {

    std::string fmt(const char* pattern, double v)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, pattern, v);
        return buf;
    }

    std::string tickLabel(double v) { return fmt("%.4g", v); }

} // namespace

std::string renderSlice(const SliceGrid& grid)
{
    constexpr double plot = 480.0, left = 90.0, top = 40.0, bottom = 70.0, right = 30.0;
    const double width = left + plot + right, height = top + plot + bottom;
    const double cell = plot / grid.bins;
    const std::string xName(kFeatureNames[grid.dimX]);
    const std::string yName(kFeatureNames[grid.dimY]);

    std::ostringstream svg;
    svg << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n';
    svg << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << width << R"(" height=")" << height
        << R"(" viewBox="0 0 )" << width << ' ' << height << R"(" font-family="sans-serif" font-size="11">)" << '\n';
    svg << "<title>" << yName << " vs " << xName << "</title>\n";
    svg << R"(<rect x="0" y="0" width=")" << width << R"(" height=")" << height << R"(" fill="#ffffff"/>)" << '\n';
    svg << R"(<rect x=")" << left << R"(" y=")" << top << R"(" width=")" << plot << R"(" height=")" << plot
        << R"(" fill="none" stroke="#000000"/>)" << '\n';

    Metres lo = 0, hi = 0;
    bool any = false;
    for (const auto& c : grid.cells) {
        if (!c)
            continue;
        lo = any ? std::min(lo, *c) : *c;
        hi = any ? std::max(hi, *c) : *c;
        any = true;
    }

    svg << "<g id=\"cells\">\n";
    for (int y = 0; y < grid.bins; ++y) {
        for (int x = 0; x < grid.bins; ++x) {
            const auto& f = grid.at(x, y);
            if (!f)
                continue;
            // Bin 0 of the y axis sits at the bottom.
            svg << R"(<rect x=")" << fmt("%.2f", left + x * cell) << R"(" y=")"
                << fmt("%.2f", top + (grid.bins - 1 - y) * cell) << R"(" width=")" << fmt("%.2f", cell)
                << R"(" height=")" << fmt("%.2f", cell) << R"(" fill=")" << rampColour(*f, lo, hi) << R"("><title>)"
                << formatKm(*f) << " km</title></rect>\n";
        }
    }
    svg << "</g>\n";

    if (!any)
        svg << R"(<text x=")" << left + plot / 2 << R"(" y=")" << top + plot / 2
            << R"(" text-anchor="middle" font-size="14">no elites in this archive</text>)" << '\n';

    // Ticks at bin edges, labelled with raw characteristic values.
    const int step = std::max(1, grid.bins / 5);
    for (int k = 0; k <= grid.bins; k += step) {
        const double px = left + k * cell;
        const double py = top + plot - k * cell;
        const double vx = grid.lowX + (grid.highX - grid.lowX) * k / grid.bins;
        const double vy = grid.lowY + (grid.highY - grid.lowY) * k / grid.bins;
        svg << R"(<line x1=")" << fmt("%.2f", px) << R"(" y1=")" << top + plot << R"(" x2=")" << fmt("%.2f", px)
            << R"(" y2=")" << top + plot + 5 << R"(" stroke="#000000"/>)" << '\n';
        svg << R"(<text x=")" << fmt("%.2f", px) << R"(" y=")" << top + plot + 18 << R"(" text-anchor="middle">)"
            << tickLabel(vx) << "</text>\n";
        svg << R"(<line x1=")" << left - 5 << R"(" y1=")" << fmt("%.2f", py) << R"(" x2=")" << left << R"(" y2=")"
            << fmt("%.2f", py) << R"(" stroke="#000000"/>)" << '\n';
        svg << R"(<text x=")" << left - 8 << R"(" y=")" << fmt("%.2f", py + 4) << R"(" text-anchor="end">)"
            << tickLabel(vy) << "</text>\n";
    }
    svg << R"(<text x=")" << left + plot / 2 << R"(" y=")" << height - 20 << R"(" text-anchor="middle" font-size="13">)"
        << xName << "</text>\n";
    svg << R"(<text x="20" y=")" << top + plot / 2 << R"(" text-anchor="middle" font-size="13" transform="rotate(-90 20 )"
        << top + plot / 2 << R"svg()">)svg" << yName << "</text>\n";
    if (any)
        svg << R"(<text x=")" << left << R"(" y="24" font-size="12">distance )" << formatKm(lo) << " km (green) to "
            << formatKm(hi) << " km (red)</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::vector<std::pair<std::size_t, std::size_t>> featurePairs()
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < kFeatureDims; ++a)
        for (std::size_t b = a + 1; b < kFeatureDims; ++b)
            pairs.emplace_back(a, b);
    return pairs;
}

void writeSlices(std::span<const CellEntry> cells, int binsPerDim, const ArchiveBounds& bounds, const fs::path& outDir)
{
    fs::create_directories(outDir);
    for (const auto& [x, y] : featurePairs()) {
        const SliceGrid grid = slice(cells, binsPerDim, bounds, x, y);
        const std::string stem = std::string(kFeatureNames[x]) + "__" + std::string(kFeatureNames[y]);
        writeFile(outDir / (stem + ".csv"), sliceCsv(grid));
        writeFile(outDir / (stem + ".svg"), renderSlice(grid));
    }
}

} // namespace wsrp
