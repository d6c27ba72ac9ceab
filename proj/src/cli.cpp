#include <wsrp/cli.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include <wsrp/ea.hpp>
#include <wsrp/export.hpp>
#include <wsrp/instances.hpp>
#include <wsrp/map_elites.hpp>
#include <wsrp/metrics.hpp>
#include <wsrp/run_record.hpp>

namespace wsrp::cli {

namespace fs = std::filesystem;

namespace {

    struct GenerateOptions {
        GeneratorConfig config;
        std::string windows = "1";
        std::string out;
    };

    struct RunOptions {
        std::string algo = "me";
        std::string instance;
        std::int64_t budget = 100000;
        std::vector<std::uint64_t> seeds{0};
        std::string out;
        unsigned jobs = 1;
        // shared
        double crossover = 0.5;
        double modeFlip = 0.1;
        int bins = 20;
        std::int64_t initCount = 1000;
        std::uint64_t boundsSeed = 0;
        bool boundsFromRun = false;
        std::vector<double> bounds;
        // EA
        int population = 100;
        int children = 40;
        int tournament = 2;
        double mutationRate = 0.7;
        bool eaTrace = false;
    };

    struct CompareOptions {
        std::vector<std::string> runsA, runsB;
        std::string labelA = "A", labelB = "B";
    };

    struct AnalyzeOptions {
        std::vector<std::string> runs;
        std::string out;
    };

    struct SlicesOptions {
        std::string run;
        std::string out;
    };

    void writeText(const fs::path& path, const std::string& text)
    {
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot open '" + path.string() + "' for writing");
        f << text;
        if (!f)
            throw std::runtime_error("failed writing '" + path.string() + "'");
    }

    int doGenerate(GenerateOptions& o, std::ostream& out)
    {
        o.config.timeWindowScheme = parseWindowScheme(o.windows);
        const GenerationReport report = generateInstanceWithReport(o.config);
        const Instance& inst = report.instance;
        saveInstance(inst, o.out);

        Metres minCar = -1, maxCar = 0;
        const std::size_t size = inst.travel.locationCount();
        for (std::size_t a = 0; a < size; ++a)
            for (std::size_t b = 0; b < size; ++b) {
                if (a == b)
                    continue;
                const Metres d = inst.travel.distance(Mode::Car, static_cast<LocationId>(a), static_cast<LocationId>(b));
                minCar = minCar < 0 ? d : std::min(minCar, d);
                maxCar = std::max(maxCar, d);
            }
        out << "instance " << inst.name << ": " << inst.visitCount() << " visits, windows "
            << windowSchemeName(inst.timeWindowScheme) << ", " << size << " locations\n";
        if (minCar >= 0)
            out << "car distances " << formatKm(minCar) << " - " << formatKm(maxCar) << " km\n";
        out << "window retries " << report.windowRetries << "\n";
        out << "wrote " << o.out << "\n";
        return kSuccess;
    }

    std::string checkpointsCsv(const std::vector<Checkpoint>& cps)
    {
        std::string s = "evaluations,bestObjectiveKm\n";
        for (const Checkpoint& c : cps)
            s += std::to_string(c.evaluations) + ',' + formatKm(c.bestObjective) + '\n';
        return s;
    }

    ArchiveBounds resolveBounds(const RunOptions& o, const Instance& inst)
    {
        if (!o.bounds.empty()) {
            if (o.bounds.size() != 2 * kFeatureDims)
                throw std::invalid_argument("--bounds needs 8 values: lo,hi for each characteristic");
            ArchiveBounds b;
            for (std::size_t d = 0; d < kFeatureDims; ++d) {
                b.lower[d] = o.bounds[2 * d];
                b.upper[d] = o.bounds[2 * d + 1];
                if (!(b.lower[d] < b.upper[d]))
                    throw std::invalid_argument("--bounds: lower must be below upper for " +
                                                std::string(kFeatureNames[d]));
            }
            return b;
        }
        return calibrateFromRandomSamples(inst, o.initCount, o.boundsSeed);
    }

    // One run, written into runDir; returns a one-line summary.
    std::string runOne(const RunOptions& o, const Instance& inst, std::uint64_t fingerprint,
                       const std::optional<ArchiveBounds>& sharedBounds, std::uint64_t seed, const fs::path& runDir)
    {
        RunRecord rec;
        rec.algorithm = o.algo;
        rec.instanceName = inst.name;
        rec.instanceFingerprint = fingerprint;
        rec.seed = seed;
        rec.binsPerDim = o.bins;
        rec.parameters["budget"] = static_cast<double>(o.budget);
        rec.parameters["crossoverProbability"] = o.crossover;
        rec.parameters["modeFlipProbability"] = o.modeFlip;
        rec.parameters["binsPerDim"] = o.bins;
        rec.parameters["calibrationSamples"] = static_cast<double>(o.initCount);
        rec.parameters["boundsSeed"] = static_cast<double>(o.boundsSeed);

        int fallbacks = 0;
        if (o.algo == "me") {
            MapElitesConfig cfg;
            cfg.evaluationBudget = o.budget;
            cfg.initCount = o.initCount;
            cfg.crossoverProbability = o.crossover;
            cfg.mutation.modeFlipProbability = o.modeFlip;
            cfg.seed = seed;
            ArchiveConfig acfg;
            acfg.binsPerDim = o.bins;
            acfg.bounds = sharedBounds;
            rec.parameters["initCount"] = static_cast<double>(o.initCount);
            rec.parameters["boundsFromRun"] = sharedBounds ? 0.0 : 1.0;
            MapElitesResult res = runMapElites(inst, cfg, acfg);
            rec.evaluations = res.evaluations;
            rec.bestObjective = res.bestObjective;
            rec.checkpoints = res.history;
            rec.bounds = res.archive.bounds();
            rec.cells = cellTable(res.archive);
            fallbacks = res.modeFallbacks;
        }
        else {
            EaConfig cfg;
            cfg.populationSize = o.population;
            cfg.childrenPerGeneration = o.children;
            cfg.tournamentSize = o.tournament;
            cfg.mutationRate = o.mutationRate;
            cfg.crossoverProbability = o.crossover;
            cfg.mutation.modeFlipProbability = o.modeFlip;
            cfg.evaluationBudget = o.budget;
            cfg.seed = seed;
            rec.parameters["populationSize"] = o.population;
            rec.parameters["childrenPerGeneration"] = o.children;
            rec.parameters["tournamentSize"] = o.tournament;
            rec.parameters["mutationRate"] = o.mutationRate;
            rec.parameters["archiveTrace"] = o.eaTrace ? 1.0 : 0.0;

            const ArchiveBounds bounds = *sharedBounds;
            std::optional<Archive> trace;
            EaObservers obs;
            if (o.eaTrace) {
                trace.emplace(o.bins, bounds);
                obs.onEvaluation = [&](const Candidate& c) { trace->tryInsert(c.genotype, c.fitness, c.characteristics); };
            }
            EaResult res = runEa(inst, cfg, obs);
            rec.evaluations = res.evaluations;
            rec.bestObjective = res.best.fitness;
            rec.checkpoints = res.history;
            rec.bounds = bounds;
            rec.cells = trace ? cellTable(*trace) : cellTable(projectIntoArchive(res.population, o.bins, bounds));
            fallbacks = res.bestPhenotype.modeFallbacks;
        }

        saveRunRecord(rec, runDir);
        exportArchive(rec.cells, runDir / "archive.csv");
        writeText(runDir / "checkpoints.csv", checkpointsCsv(rec.checkpoints));

        std::ostringstream line;
        line << o.algo << " seed " << seed << ": best " << formatKm(rec.bestObjective) << " km, " << rec.cells.size()
             << " cells, " << rec.evaluations << " evaluations";
        if (fallbacks)
            line << ", " << fallbacks << " mode fallbacks";
        line << " -> " << runDir.string() << "\n";
        return line.str();
    }

    int doRun(const RunOptions& o, std::ostream& out)
    {
        if (o.algo != "me" && o.algo != "ea")
            throw std::invalid_argument("--algo must be 'me' or 'ea'");
        if (o.seeds.empty())
            throw std::invalid_argument("at least one --seed is required");
        if (o.algo == "me") {
            MapElitesConfig probe;
            probe.evaluationBudget = o.budget;
            probe.initCount = o.initCount;
            probe.crossoverProbability = o.crossover;
            probe.mutation.modeFlipProbability = o.modeFlip;
            validate(probe);
        }
        else {
            EaConfig probe;
            probe.populationSize = o.population;
            probe.childrenPerGeneration = o.children;
            probe.tournamentSize = o.tournament;
            probe.mutationRate = o.mutationRate;
            probe.crossoverProbability = o.crossover;
            probe.mutation.modeFlipProbability = o.modeFlip;
            probe.evaluationBudget = o.budget;
            validate(probe);
            if (o.boundsFromRun)
                throw std::invalid_argument("--bounds-from-run only applies to --algo me");
        }
        if (o.bins < 1)
            throw std::invalid_argument("--bins must be at least 1");

        const Instance inst = loadInstance(o.instance);
        const std::uint64_t fingerprint = instanceFingerprint(inst);
        std::optional<ArchiveBounds> bounds;
        if (!o.boundsFromRun)
            bounds = resolveBounds(o, inst);

        const bool single = o.seeds.size() == 1;
        std::vector<std::string> lines(o.seeds.size());
        std::vector<std::exception_ptr> errors(o.seeds.size());
        std::atomic<std::size_t> next{0};
        const auto worker = [&] {
            for (std::size_t i = next++; i < o.seeds.size(); i = next++) {
                const std::uint64_t seed = o.seeds[i];
                const fs::path dir = single ? fs::path(o.out) : fs::path(o.out) / (o.algo + "-s" + std::to_string(seed));
                try {
                    lines[i] = runOne(o, inst, fingerprint, bounds, seed, dir);
                }
                catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        const unsigned jobs = std::clamp<unsigned>(o.jobs, 1, static_cast<unsigned>(o.seeds.size()));
        std::vector<std::thread> pool;
        for (unsigned j = 1; j < jobs; ++j)
            pool.emplace_back(worker);
        worker();
        for (auto& t : pool)
            t.join();
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);
        for (const auto& l : lines)
            out << l;
        return kSuccess;
    }

    std::vector<RunRecord> loadRuns(const std::vector<std::string>& paths)
    {
        std::vector<fs::path> ps(paths.begin(), paths.end());
        std::vector<RunRecord> runs;
        for (const fs::path& d : collectRunDirs(ps))
            runs.push_back(loadRunRecord(d));
        return runs;
    }

    double median(std::vector<double> v)
    {
        std::sort(v.begin(), v.end());
        const std::size_t n = v.size();
        return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
    }

    int doCompare(const CompareOptions& o, std::ostream& out)
    {
        const auto a = loadRuns(o.runsA);
        const auto b = loadRuns(o.runsB);
        for (const auto* group : {&a, &b})
            for (const RunRecord& r : *group)
                if (r.instanceFingerprint != a.front().instanceFingerprint)
                    throw ValidationError("compare: runs are on different instances ('" + a.front().instanceName +
                                          "' vs '" + r.instanceName + "')");
        std::vector<double> va, vb;
        for (const RunRecord& r : a)
            va.push_back(toKm(r.bestObjective));
        for (const RunRecord& r : b)
            vb.push_back(toKm(r.bestObjective));
        const EffectSize e = varghaDelaney(va, vb);

        char buf[256];
        out << "instance " << a.front().instanceName << "\n";
        std::snprintf(buf, sizeof buf, "%s: %zu runs (%s), median best %.3f km\n", o.labelA.c_str(), va.size(),
                      a.front().algorithm.c_str(), median(va));
        out << buf;
        std::snprintf(buf, sizeof buf, "%s: %zu runs (%s), median best %.3f km\n", o.labelB.c_str(), vb.size(),
                      b.front().algorithm.c_str(), median(vb));
        out << buf;
        const char* direction = e.aHat > 0.5 ? o.labelA.c_str() : e.aHat < 0.5 ? o.labelB.c_str() : "neither";
        std::snprintf(buf, sizeof buf, "A_hat(%s,%s) = %.4f  effect %s  better %s  %s\n", o.labelA.c_str(),
                      o.labelB.c_str(), e.aHat, std::string(magnitudeName(e.magnitude)).c_str(), direction,
                      effectArrows(e).c_str());
        out << buf;
        out << "effect bands: |A-0.5| <= 0.06 small, <= 0.14 medium, otherwise large; A > 0.5 favours "
            << o.labelA << " (lower distance)\n";
        return kSuccess;
    }

    int doAnalyze(const AnalyzeOptions& o, std::ostream& out)
    {
        const auto paths = collectRunDirs(std::vector<fs::path>(o.runs.begin(), o.runs.end()));
        std::vector<RunRecord> runs;
        for (const auto& p : paths)
            runs.push_back(loadRunRecord(p));
        const CellPool pool = buildCellPool(runs);

        std::string csv = "run,algorithm,seed,filledCells,cMax,coverage,precision,bestObjectiveKm\n";
        for (std::size_t i = 0; i < runs.size(); ++i) {
            const RunRecord& r = runs[i];
            char buf[64];
            csv += paths[i].string() + ',' + r.algorithm + ',' + std::to_string(r.seed) + ',' +
                   std::to_string(r.cells.size()) + ',' + std::to_string(pool.cMax.size()) + ',';
            std::snprintf(buf, sizeof buf, "%.6f,", coverage(r, pool.cMax));
            csv += buf;
            std::snprintf(buf, sizeof buf, "%.6f,", r.cells.empty() ? 0.0 : precision(r, pool.bestPerCell));
            csv += buf;
            csv += formatKm(r.bestObjective) + '\n';
        }
        if (o.out.empty()) {
            out << csv;
        }
        else {
            writeText(o.out, csv);
            out << "analyzed " << runs.size() << " runs on " << runs.front().instanceName << ", C_Max "
                << pool.cMax.size() << " cells -> " << o.out << "\n";
        }
        return kSuccess;
    }

    int doSlices(const SlicesOptions& o, std::ostream& out)
    {
        const RunRecord r = loadRunRecord(o.run);
        writeSlices(r.cells, r.binsPerDim, r.bounds, o.out);
        out << "wrote " << featurePairs().size() << " slice maps (svg + csv) for " << r.cells.size() << " cells to "
            << o.out << "\n";
        return kSuccess;
    }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quality-diversity search for workforce scheduling and routing", "wsrp"};
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* g = app.add_subcommand("generate", "Generate a synthetic instance");
    g->add_option("--visits", gen.config.visitCount, "Number of visits")->required();
    g->add_option("--windows", gen.windows, "Time-window scheme: 1, 2, 4, 8 or rnd")->required();
    g->add_option("--seed", gen.config.seed, "Generator seed")->required();
    g->add_option("--out", gen.out, "Output instance file")->required();
    g->add_option("--name", gen.config.name, "Instance name");
    g->add_option("--area-km", gen.config.areaExtentKm, "Side of the square service area (km)");
    g->add_option("--car-speed", gen.config.carSpeedKmH, "Car speed (km/h)");
    g->add_option("--pt-speed", gen.config.ptSpeedKmH, "Public transport speed (km/h)");
    g->add_option("--pt-detour", gen.config.ptDetourFactor, "Public transport distance multiplier (>= 1)");
    g->add_option("--car-emissions", gen.config.costParams.carEmissionsPerKm, "Car emissions (g/km)");
    g->add_option("--pt-emissions", gen.config.costParams.ptEmissionsPerKm, "Public transport emissions (g/km)");
    g->add_option("--staff-rate", gen.config.costParams.staffRatePerHour, "Staff cost per hour");
    g->add_option("--car-cost", gen.config.costParams.carCostPerKm, "Car cost per km");
    g->add_option("--pt-cost", gen.config.costParams.ptCostPerKm, "Public transport cost per km");

    RunOptions ro;
    auto* r = app.add_subcommand("run", "Run MAP-Elites or the EA on an instance");
    r->add_option("--algo", ro.algo, "me or ea")->required();
    r->add_option("--instance", ro.instance, "Instance file")->required();
    r->add_option("--budget", ro.budget, "Evaluation budget")->capture_default_str();
    r->add_option("--seed", ro.seeds, "Seed(s); several seeds write <out>/<algo>-s<seed>")->expected(1, -1);
    r->add_option("--out", ro.out, "Run directory")->required();
    r->add_option("--jobs", ro.jobs, "Parallel runs")->capture_default_str();
    r->add_option("--crossover", ro.crossover, "Crossover probability")->capture_default_str();
    r->add_option("--mode-flip", ro.modeFlip, "Mode-gene flip probability per mutation")->capture_default_str();
    r->add_option("--bins", ro.bins, "Bins per characteristic")->capture_default_str();
    r->add_option("--init", ro.initCount, "Random initial evaluations (ME) and calibration samples")
        ->capture_default_str();
    r->add_option("--bounds-seed", ro.boundsSeed, "Seed of the shared bound calibration")->capture_default_str();
    r->add_flag("--bounds-from-run", ro.boundsFromRun, "ME: calibrate bounds from the run's own initial samples");
    r->add_option("--bounds", ro.bounds, "Explicit bounds lo,hi x4 (emissions, staffCost, travelCost, carUse)")
        ->delimiter(',');
    r->add_option("--population", ro.population, "EA population size")->capture_default_str();
    r->add_option("--children", ro.children, "EA children per generation")->capture_default_str();
    r->add_option("--tournament", ro.tournament, "EA tournament size")->capture_default_str();
    r->add_option("--mutation-rate", ro.mutationRate, "EA per-child mutation probability")->capture_default_str();
    r->add_flag("--ea-trace", ro.eaTrace, "EA: archive every evaluated individual instead of the final population");

    CompareOptions co;
    auto* c = app.add_subcommand("compare", "Vargha-Delaney A on best objectives of two run groups");
    c->add_option("--runs-a", co.runsA, "Run directories of group A")->required()->expected(1, -1);
    c->add_option("--runs-b", co.runsB, "Run directories of group B")->required()->expected(1, -1);
    c->add_option("--label-a", co.labelA, "Label for group A");
    c->add_option("--label-b", co.labelB, "Label for group B");

    AnalyzeOptions ao;
    auto* a = app.add_subcommand("analyze", "Coverage and precision over a pool of runs");
    a->add_option("--runs", ao.runs, "Run directories")->required()->expected(1, -1);
    a->add_option("--out", ao.out, "CSV output file (default stdout)");

    SlicesOptions so;
    auto* s = app.add_subcommand("slices", "Pairwise 2-D map slices of a run's archive");
    s->add_option("--run", so.run, "Run directory")->required();
    s->add_option("--out", so.out, "Output directory")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (g->parsed())
            return doGenerate(gen, out);
        if (r->parsed())
            return doRun(ro, out);
        if (c->parsed())
            return doCompare(co, out);
        if (a->parsed())
            return doAnalyze(ao, out);
        if (s->parsed())
            return doSlices(so, out);
    }
    catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDataError;
    }
    return kUsageError;
}

} // namespace wsrp::cli
