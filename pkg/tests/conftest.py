import shutil
from pathlib import Path

import pytest

from semlift import cli

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture()
def corpus(tmp_path) -> Path:
    """A scratch copy of the demo corpus (config + schema + docs + stubs)."""
    target = tmp_path / "corpus"
    shutil.copytree(FIXTURES / "corpus", target)
    return target


def run_pipeline(corpus_dir: Path, upto: str = "index") -> Path:
    """Run the CLI pipeline in-process up to and including the given stage."""
    stages = ["lift-schema", "convert", "align", "apply", "enrich", "index"]
    config = str(corpus_dir / "pipeline.toml")
    for stage in stages[: stages.index(upto) + 1]:
        rc = cli.main(["--config", config, stage])
        assert rc == 0, f"stage {stage} failed"
    return corpus_dir / "out"


@pytest.fixture(scope="session")
def pipeline_out(tmp_path_factory) -> Path:
    """One shared full pipeline run for read-only service tests."""
    target = tmp_path_factory.mktemp("corpus-shared") / "corpus"
    shutil.copytree(FIXTURES / "corpus", target)
    return run_pipeline(target)
