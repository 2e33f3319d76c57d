// Copyright 2026 The dnb-endgame Authors. All rights reserved.
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

#ifndef DNB_HTTP_SERVER_HPP_
#define DNB_HTTP_SERVER_HPP_

#include <string>

#include "httplib.h"

#include "dnb/service.hpp"

namespace dnb {

// Binds every request to api.handle. Blocks until the server stops.
inline void mount(httplib::Server& server, Api& api) {
  auto forward = [&api](const httplib::Request& req, httplib::Response& res) {
    ApiResponse out = api.handle(req.method, req.path, req.body);
    res.status = out.status;
    res.set_content(out.body.dump(), "application/json");
  };
  server.Get(R"(/.*)", forward);
  server.Post(R"(/.*)", forward);
}

inline bool serve(Api& api, const std::string& host, int port) {
  httplib::Server server;
  mount(server, api);
  return server.listen(host, port);
}

}  // namespace dnb

#endif  // DNB_HTTP_SERVER_HPP_
