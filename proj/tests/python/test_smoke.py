# Copyright 2026 The chargraph Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the chargraph Python bindings."""

import json

import pytest

import chargraph


def test_build_graph_and_diameter():
    g = chargraph.build_graph([1, 2, 3, 5, 6])
    assert g.vertices == [2, 3, 5]
    assert g.edges == [(2, 3)]
    assert chargraph.diameter(g) == 1
    assert len(chargraph.components(g)) == 2


def test_screen_path_passes():
    g = chargraph.parse_dot("graph g { 2 -- 3; 3 -- 5; 5 -- 7; }")
    report = chargraph.screen(g)
    assert report["passed"]
    assert report["witness"] == {"p": 2, "q": 7}
    assert chargraph.validate_report(g, report)


def test_screen_cycle_fails():
    primes = [2, 3, 5, 7, 11, 13, 17]
    edges = "".join(f"{a} -- {b};" for a, b in zip(primes, primes[1:] + primes[:1]))
    report = chargraph.screen(chargraph.parse_dot("graph g {" + edges + "}"))
    codes = {r["code"] for r in report["reasons"]}
    assert codes == {"DIAM3_NOT_DUKE", "DIAM3_COMPLEMENT_NOT_BIPARTITE",
                     "DIAM3_LEMMA31_FAILS"}


def test_psl2_crosscheck():
    assert chargraph.psl2_degrees(11) == [1, 5, 10, 11, 12]
    assert chargraph.psl2_graph(11) == chargraph.build_graph([1, 5, 10, 11, 12])


def test_errors_raise():
    with pytest.raises(chargraph.ChargraphError):
        chargraph.psl2_degrees(6)
    with pytest.raises(ValueError):
        chargraph.build_graph([2, 3])


def test_run_cli():
    code, out, _ = chargraph.run_cli(["analyze", "--degrees", "1,2,3"])
    assert code == 0
    assert json.loads(out)["graph"]["vertices"] == [2, 3]
    code, _, err = chargraph.run_cli(["bogus"])
    assert code == 2 and err
