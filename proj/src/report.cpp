#include "gchn/report.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace gchn {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

std::string fmt(int v) { return std::to_string(v); }

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

void write_csv(const ExperimentReport& rep, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    for (std::size_t i = 0; i < rep.columns.size(); ++i) {
        if (i) out << ',';
        out << csv_escape(rep.columns[i]);
    }
    out << "\r\n";
    for (const auto& row : rep.rows) {
        if (row.size() != rep.columns.size())
            throw std::runtime_error("write_csv: ragged row in " + rep.id);
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << csv_escape(row[i]);
        }
        out << "\r\n";
    }
}

void parallel_for(int count, const std::function<void(int)>& fn) {
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("BESOV_WITNESS_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) workers = v;
    }
    workers = std::max(1, std::min(workers, count));

    if (workers == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace gchn
