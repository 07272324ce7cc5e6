import json
import pathlib
from os import listdir
from os.path import isfile, join

import yaml

data_path = pathlib.Path(__file__).parent.resolve() / "data"
files = [
    f for f in listdir(data_path) if isfile(join(data_path, f)) and f.endswith(".yaml")
]
resources = {}
for file in files:
    with open(join(data_path, file), "r", encoding="utf8") as f:
        resources[file[: -len(".yaml")]] = yaml.safe_load(f)

gate_catalog: dict = resources["gates"]
texts: dict = resources["texts"]

with open(data_path / "gate_spec.schema.json", "r", encoding="utf8") as f:
    gate_spec_schema: dict = json.load(f)
