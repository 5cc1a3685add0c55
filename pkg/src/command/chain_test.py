import math
import os

from main import app
from package import key, storage
from typer.testing import CliRunner

runner = CliRunner()


def _run(tmp_path, args: list[str]):
    result = runner.invoke(app, ["chain", *args, "--output-dir", str(tmp_path)])
    assert result.exit_code == 0, result.output
    df = storage.read_df(os.path.join(tmp_path, key.TRAJECTORY_FILE_NAME))
    metadata = storage.read_json(os.path.join(tmp_path, key.METADATA_FILE_NAME))
    return df, metadata


def test_periodic_trajectory_shape(tmp_path):
    df, metadata = _run(tmp_path, ["periodic", "--n", "4", "--beta", "2", "--h", "0", "--steps", "3", "--seed", "1"])

    assert df.groupby(key.LEVEL_KEY).size().tolist() == [4, 4, 4, 4]
    assert metadata[key.LEVELS_KEY] == [0.0, 0.0, 0.0]
    assert metadata[key.TRUSTED_REGION_KEY][0] == [None, None]
    solves = storage.read_json(os.path.join(tmp_path, key.LEVEL_SET_FILE_NAME))[key.LEVEL_SET_STEPS_KEY]
    assert len(solves) == 3


def test_corners_dimension_grows(tmp_path):
    df, _ = _run(tmp_path, ["corners", "--n0", "1", "--steps", "7", "--beta", "1", "--seed", "2"])

    assert df.groupby(key.LEVEL_KEY).size().tolist() == list(range(1, 9))
    assert not os.path.exists(os.path.join(tmp_path, key.LEVEL_SET_FILE_NAME))


def test_rescaled_corners_records_level(tmp_path):
    _, metadata = _run(tmp_path, ["corners", "--n0", "50", "--steps", "2", "--alpha", "0.5", "--rescale", "--seed", "3"])

    assert math.isclose(metadata["h"], -0.5 / math.sqrt(3.75), rel_tol=1e-15)
    assert metadata["rescale"]["base_n"] == 50


def test_bead_trusted_region_shrinks(tmp_path):
    df, metadata = _run(tmp_path, ["bead", "--halfwidth", "40", "--steps", "2", "--seed", "4"])

    regions = metadata[key.TRUSTED_REGION_KEY]
    assert len(regions) == 3
    assert regions[1][0] > regions[0][0] and regions[1][1] < regions[0][1]
    counts = df.groupby(key.LEVEL_KEY).size().tolist()
    assert counts[1] <= counts[0] - 3 and counts[2] <= counts[1] - 3
    assert regions[0] == [-40.0, 40.0]
    for level, (low, high) in enumerate(regions):
        positions = df[df[key.LEVEL_KEY] == level][key.POSITION_KEY]
        assert positions.between(low, high).all()

    solves = storage.read_json(os.path.join(tmp_path, key.LEVEL_SET_FILE_NAME))[key.LEVEL_SET_STEPS_KEY]
    assert [solve[key.LEVEL_KEY] for solve in solves] == [1, 2]
    assert all(solve[key.RESIDUAL_KEY] < 1e-8 for solve in solves)


def test_negative_steps_is_usage_error(tmp_path):
    result = runner.invoke(app, ["chain", "periodic", "--n", "4", "--steps", "-1", "--output-dir", str(tmp_path)])

    assert result.exit_code == 2
