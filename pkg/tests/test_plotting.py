from motwedge.chart import enumerate_dots
from motwedge.plotting import render_chart


def test_renders_png_and_pdf(tmp_path):
    dots = enumerate_dots(70)
    png = render_chart(dots, tmp_path / "wedge.png")
    pdf = render_chart(dots, tmp_path / "wedge.pdf", labels=False)
    assert png.stat().st_size > 1000
    assert pdf.read_bytes()[:4] == b"%PDF"
