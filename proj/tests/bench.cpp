// Benchmark: parallel vs serial fare-multiset evaluation over the homset.
// Usage: bench [data_dir] [repeats]
#include <chrono>
#include <iostream>

#include "catalog.hpp"
#include "fare.hpp"
#include "homset.hpp"

using namespace bqf;
using Clock = std::chrono::steady_clock;

int main(int argc, char** argv) {
    std::string data = argc > 1 ? argv[1] : "data";
    int repeats = argc > 2 ? std::stoi(argv[2]) : 20;
    std::string err;
    auto bq_text = read_file(data + "/biquandles/z6_bq.txt");
    auto f_text = read_file(data + "/fares/through_z6.txt");
    auto cat = Catalog::open(data, &err);
    if (!bq_text || !f_text || !cat) {
        std::cerr << "cannot load benchmark inputs from " << data << "\n";
        return 2;
    }
    auto B = parse_biquandle(*bq_text, &err);
    auto f = parse_fare(*f_text, &err);
    std::vector<std::string> links = {"8_18", "8_17", "8_16", "L7a7", "7_7"};
    double t_par = 0, t_ser = 0;
    i64 total = 0;
    for (const auto& name : links) {
        auto D = cat->load(name, &err);
        if (!D) {
            std::cerr << "missing " << name << ": " << err << "\n";
            return 2;
        }
        FareMultiset mp, ms;
        auto t0 = Clock::now();
        for (int r = 0; r < repeats; ++r) mp = fare_multiset(*D, *B, *f);
        auto t1 = Clock::now();
        for (int r = 0; r < repeats; ++r) ms = fare_multiset_serial(*D, *B, *f);
        auto t2 = Clock::now();
        if (mp != ms) {
            std::cerr << "MISMATCH between parallel and serial results on " << name << "\n";
            return 1;
        }
        for (const auto& [v, k] : mp) total += k;
        double dp = std::chrono::duration<double, std::milli>(t1 - t0).count() / repeats;
        double ds = std::chrono::duration<double, std::milli>(t2 - t1).count() / repeats;
        t_par += dp;
        t_ser += ds;
        std::cout << name << ": parallel " << dp << " ms, serial " << ds
                  << " ms, multiset " << multiset_str(mp) << "\n";
    }
    std::cout << "total: parallel " << t_par << " ms, serial " << t_ser
              << " ms, speedup x" << (t_par > 0 ? t_ser / t_par : 0)
              << " (" << total << " colorings evaluated per pass)\n";
    return 0;
}
