import json
import os
import signal
import subprocess
import sys
import time
from pathlib import Path

import pytest
import requests

from gaius.cli import main
from gaius.maml import parse_page


def test_convert_fixture_matches_frozen_golden(corpus_dir, tmp_path, capsys):
    out = tmp_path / "news.maml"
    code = main(["convert", str(corpus_dir / "news"), "-o", str(out),
                 "--page-id", "fx-news", "--title", "news front page",
                 "--language", "en-IN"])
    assert code == 0
    golden = (corpus_dir / "news" / "page.maml").read_text(encoding="utf-8")
    converted = out.read_text(encoding="utf-8")
    # location differs from the corpus options; geometry and objects must not
    assert json.loads(converted)["objects"] == json.loads(golden)["objects"]


def test_convert_missing_path_exits_2(tmp_path):
    assert main(["convert", str(tmp_path / "nothing")]) == 2


def test_convert_validate_only_writes_nothing(corpus_dir, tmp_path, capsys):
    out = tmp_path / "x.maml"
    code = main(["convert", str(corpus_dir / "blog"), "-o", str(out),
                 "--validate-only"])
    assert code == 0
    assert not out.exists()
    assert "violations" in capsys.readouterr().out


def test_rss_fixture(fixtures_dir, tmp_path, capsys):
    out = tmp_path / "feed.maml"
    code = main(["--json", "rss", str(fixtures_dir / "rss" / "feed5.xml"),
                 "-o", str(out)])
    assert code == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["items"] == 5 and summary["objects"] == 15
    page = parse_page(out.read_text(encoding="utf-8"))
    assert len(page.objects) == 15


def test_rss_empty_feed(tmp_path):
    feed = tmp_path / "empty.xml"
    feed.write_text("<rss version=\"2.0\"><channel><title>e</title>"
                    "</channel></rss>")
    out = tmp_path / "empty.maml"
    assert main(["rss", str(feed), "-o", str(out)]) == 0
    assert len(parse_page(out.read_text()).objects) == 0


def test_rss_malformed_exits_2(tmp_path, capsys):
    feed = tmp_path / "broken.xml"
    feed.write_text("<rss><channel><item></rss>")
    assert main(["rss", str(feed)]) == 2
    assert "line" in capsys.readouterr().err


def test_bench_thresholds_pass_on_corpus(corpus_dir, tmp_path, capsys):
    code = main(["--json", "bench", str(corpus_dir), "-o", str(tmp_path),
                 "--assert-thresholds"])
    assert code == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["threshold_failures"] == []
    assert (tmp_path / "report.csv").exists()
    assert (tmp_path / "cdf_reductions.png").exists()


def test_bench_empty_corpus_exits_2(tmp_path):
    assert main(["bench", str(tmp_path / "none"), "-o", str(tmp_path)]) == 2


def test_bench_fidelity_restriction(corpus_dir, tmp_path, capsys):
    code = main(["--json", "bench", str(corpus_dir), "-o", str(tmp_path),
                 "--fidelity", "low"])
    assert code == 0
    import csv
    with (tmp_path / "report.csv").open() as fh:
        fidelities = {row["fidelity"] for row in csv.DictReader(fh)
                      if row["variant"] == "maml"}
    assert fidelities == {"high", "low"}


def test_serve_bad_config_exits_2(tmp_path):
    cfg = tmp_path / "edge.conf"
    cfg.write_text("listen_port = not-a-number\n")
    assert main(["serve", "--config", str(cfg)]) == 2


def test_serve_subprocess_end_to_end(tmp_path):
    cfg = tmp_path / "edge.conf"
    port = _free_port()
    cfg.write_text(f"listen_host = 127.0.0.1\nlisten_port = {port}\n"
                   f"store_path = {tmp_path / 'store'}\n")
    proc = subprocess.Popen(
        [sys.executable, "-m", "gaius.cli", "serve", "--config", str(cfg)],
        stdout=subprocess.PIPE, stderr=subprocess.STDOUT)
    base = f"http://127.0.0.1:{port}"
    try:
        _wait_for_health(base)
        user = requests.post(f"{base}/v1/users", json={}).json()
        doc = {"page": {"title": "smoke"}, "objects": []}
        r = requests.post(f"{base}/v1/pages", data=json.dumps(doc),
                          headers={"Authorization": f"Bearer {user['token']}"})
        assert r.status_code == 201
        page_id = r.json()["page_id"]
        got = requests.get(f"{base}/v1/pages/{page_id}")
        assert got.status_code == 200
    finally:
        proc.send_signal(signal.SIGINT)
        assert proc.wait(timeout=10) == 0
    # the interrupted server flushed its pending request log
    log = tmp_path / "store" / "logs" / "requests.jsonl"
    assert len(log.read_text().splitlines()) == 1


def _free_port() -> int:
    import socket
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]


def _wait_for_health(base, timeout=10.0):
    deadline = time.time() + timeout
    while time.time() < deadline:
        try:
            if requests.get(f"{base}/v1/health", timeout=1).ok:
                return
        except requests.ConnectionError:
            time.sleep(0.1)
    raise TimeoutError(f"edge at {base} never became healthy")
