# -*- coding: utf-8 -*-

import os

import pytest

import actgram.utility.tools as tools


@pytest.fixture
def targets(tmp_path):
	first, second = tmp_path / "a.txt", tmp_path / "b.txt"
	first.write_text("old a\n", encoding="utf-8")
	second.write_text("old b\n", encoding="utf-8")
	return first, second


def test_writes_every_file(tmp_path, targets):
	first, second = targets
	third = tmp_path / "new" / "c.txt"
	written = tools.write_files_atomically([(str(first), "new a\n"), (str(second), "new b\n"), (str(third), "c\n")])
	assert written == [str(first), str(second), str(third)]
	assert first.read_text(encoding="utf-8") == "new a\n"
	assert third.read_text(encoding="utf-8") == "c\n"
	assert sorted(os.listdir(str(tmp_path))) == ["a.txt", "b.txt", "new"]


def test_failed_write_leaves_every_target(tmp_path, targets):
	first, second = targets
	with pytest.raises(TypeError):
		tools.write_files_atomically([(str(first), "new a\n"), (str(second), None)])
	assert first.read_text(encoding="utf-8") == "old a\n"
	assert second.read_text(encoding="utf-8") == "old b\n"
	assert sorted(os.listdir(str(tmp_path))) == ["a.txt", "b.txt"]


def test_failed_rename_keeps_earlier_targets(tmp_path, targets, monkeypatch):
	first, second = targets
	replace = os.replace
	renamed = []

	def failing_replace(source, target):
		renamed.append(target)
		if len(renamed) == 2:
			raise OSError("no space left on device")
		replace(source, target)

	monkeypatch.setattr(os, "replace", failing_replace)
	with pytest.raises(OSError):
		tools.write_files_atomically([(str(first), "new a\n"), (str(second), "new b\n")])
	assert first.read_text(encoding="utf-8") == "new a\n"
	assert second.read_text(encoding="utf-8") == "old b\n"
	assert sorted(os.listdir(str(tmp_path))) == ["a.txt", "b.txt"]
