// Copyright 2026 The Pauliscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "pauliscope/parallel.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

using namespace pauliscope;

size_t pauliscope::default_thread_count() {
    if (const char *env = std::getenv("PAULISCOPE_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) {
                return static_cast<size_t>(v);
            }
        } catch (const std::exception &) {
            // fall through to the hardware default
        }
    }
    size_t hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void pauliscope::parallel_for(size_t count, size_t threads, const std::function<void(size_t)> &fn) {
    if (threads == 0) {
        threads = default_thread_count();
    }
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (size_t i = 0; i < count; i++) {
            fn(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; t++) {
        pool.emplace_back(worker);
    }
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}
