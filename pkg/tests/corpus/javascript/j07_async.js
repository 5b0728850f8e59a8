async function load(url) {
  const data = await fetch(url);
  return data.json();
}

const loader = async (u) => {
  await load(u);
};
